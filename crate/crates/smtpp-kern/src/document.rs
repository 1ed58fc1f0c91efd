use crate::error::KernError;

/// Classification of one document line, derived from its cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineKind {
    /// `**kern` per spine; opens the document.
    ExclusiveInterpretation,
    /// Tandem interpretation such as `*M4/4`, `*clefG2` or the null `*`.
    TandemInterpretation,
    /// Musical content: note/rest symbols and `.` placeholders.
    Data,
    /// Barline, e.g. `=4` in every spine.
    Barline,
    /// `*-` per spine; closes the document.
    Terminator,
    /// `!` local or `!!` global comment.
    Comment,
}

/// One line of a **kern document: tab-separated cells plus its kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernLine {
    pub cells: Vec<String>,
    pub kind: LineKind,
}

impl KernLine {
    pub fn new(cells: Vec<String>, kind: LineKind) -> Self {
        Self { cells, kind }
    }

    /// The serialized text of the line (cells joined by tabs).
    pub fn text(&self) -> String {
        self.cells.join("\t")
    }
}

/// A parsed **kern document. Reading order is left-to-right within a line
/// (all simultaneous symbols), then top-to-bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernDocument {
    pub lines: Vec<KernLine>,
    pub spine_count: usize,
}

impl KernDocument {
    /// Data-line count, handy for merge bookkeeping and statistics.
    pub fn data_line_count(&self) -> usize {
        self.lines
            .iter()
            .filter(|l| l.kind == LineKind::Data)
            .count()
    }

    /// The first tandem meter interpretation token (e.g. `*M4/4`), if any.
    pub fn meter(&self) -> Option<&str> {
        for line in &self.lines {
            if line.kind != LineKind::TandemInterpretation {
                continue;
            }
            for cell in &line.cells {
                if cell.starts_with("*M") && cell[2..].starts_with(|c: char| c.is_ascii_digit()) {
                    return Some(cell.as_str());
                }
            }
        }
        None
    }
}

fn classify(cells: &[String]) -> LineKind {
    let first = cells[0].as_str();
    if first.starts_with('!') {
        LineKind::Comment
    } else if cells.iter().all(|c| c == "*-") {
        LineKind::Terminator
    } else if first.starts_with("**") {
        LineKind::ExclusiveInterpretation
    } else if first.starts_with('*') {
        LineKind::TandemInterpretation
    } else if first.starts_with('=') {
        LineKind::Barline
    } else {
        LineKind::Data
    }
}

/// Parse full **kern file contents into a [`KernDocument`].
///
/// Tracks spine split (`*^`) and merge (`*v`) indicators so that the cell
/// count of every line can be validated against the active spine count.
/// `serialize(parse_kern(x))` is byte-identical to `x` modulo trailing
/// whitespace.
pub fn parse_kern(text: &str) -> Result<KernDocument, KernError> {
    let mut lines = Vec::new();
    let mut spine_count = None;
    let mut active: usize = 0;
    let mut terminated = false;

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if raw_line.trim().is_empty() {
            continue;
        }
        let cells: Vec<String> = raw_line.split('\t').map(str::to_owned).collect();
        let kind = classify(&cells);

        if kind == LineKind::Comment {
            lines.push(KernLine::new(cells, kind));
            continue;
        }
        if terminated {
            return Err(KernError::SpineMismatch {
                line: line_no,
                expected: 0,
                found: cells.len(),
            });
        }

        match spine_count {
            None => {
                if kind != LineKind::ExclusiveInterpretation
                    || !cells.iter().all(|c| c == "**kern")
                {
                    return Err(KernError::MalformedHeader(format!(
                        "first non-comment line must be **kern interpretations, got {:?}",
                        raw_line
                    )));
                }
                spine_count = Some(cells.len());
                active = cells.len();
            }
            Some(_) => {
                if cells.len() != active {
                    return Err(KernError::SpineMismatch {
                        line: line_no,
                        expected: active,
                        found: cells.len(),
                    });
                }
                match kind {
                    LineKind::Terminator => terminated = true,
                    LineKind::TandemInterpretation => {
                        active = apply_spine_indicators(&cells);
                    }
                    _ => {}
                }
            }
        }
        lines.push(KernLine::new(cells, kind));
    }

    let spine_count = spine_count
        .ok_or_else(|| KernError::MalformedHeader("empty document, no **kern line".into()))?;
    if !terminated {
        return Err(KernError::MalformedHeader(
            "missing *- terminator line".into(),
        ));
    }
    Ok(KernDocument { lines, spine_count })
}

/// New active spine count after a tandem line containing `*^` / `*v`.
/// A run of k consecutive `*v` cells merges into one spine.
fn apply_spine_indicators(cells: &[String]) -> usize {
    let mut count = 0usize;
    let mut i = 0;
    while i < cells.len() {
        match cells[i].as_str() {
            "*^" => {
                count += 2;
                i += 1;
            }
            "*v" => {
                let mut run = 0;
                while i < cells.len() && cells[i] == "*v" {
                    run += 1;
                    i += 1;
                }
                count += if run >= 2 { 1 } else { run };
            }
            _ => {
                count += 1;
                i += 1;
            }
        }
    }
    count
}

/// Serialize a document back to **kern text, one line per [`KernLine`],
/// with a trailing newline.
pub fn serialize(doc: &KernDocument) -> String {
    let mut out = String::new();
    for line in &doc.lines {
        out.push_str(&line.text());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_SPINE: &str = "**kern\t**kern\n*clefF4\t*clefG2\n*M4/4\t*M4/4\n=1\t=1\n4C\t8ccL\n4D\t8bJ\n*-\t*-\n";

    #[test]
    fn parses_two_spine_pianoform() {
        let doc = parse_kern(TWO_SPINE).unwrap();
        assert_eq!(doc.spine_count, 2);
        assert_eq!(doc.data_line_count(), 2);
        assert_eq!(doc.meter(), Some("*M4/4"));
    }

    #[test]
    fn minimal_document() {
        let doc = parse_kern("**kern\n*-\n").unwrap();
        assert_eq!(doc.spine_count, 1);
        assert_eq!(doc.data_line_count(), 0);
        assert_eq!(doc.lines.len(), 2);
    }

    #[test]
    fn round_trip_serialization() {
        let doc = parse_kern(TWO_SPINE).unwrap();
        assert_eq!(serialize(&doc), TWO_SPINE);
    }

    #[test]
    fn spine_mismatch_reports_line() {
        let text = "**kern\t**kern\n4c\t4d\t4e\n*-\t*-\n";
        match parse_kern(text) {
            Err(KernError::SpineMismatch {
                line,
                expected,
                found,
            }) => {
                assert_eq!(line, 2);
                assert_eq!(expected, 2);
                assert_eq!(found, 3);
            }
            other => panic!("expected SpineMismatch, got {:?}", other),
        }
    }

    #[test]
    fn missing_header_is_malformed() {
        assert!(matches!(
            parse_kern("4c\n*-\n"),
            Err(KernError::MalformedHeader(_))
        ));
        assert!(matches!(
            parse_kern(""),
            Err(KernError::MalformedHeader(_))
        ));
    }

    #[test]
    fn spine_split_and_merge_adjust_cell_counts() {
        let text = "**kern\n*^\n4c\t4d\n*v\t*v\n4e\n*-\n";
        let doc = parse_kern(text).unwrap();
        assert_eq!(doc.spine_count, 1);
        assert_eq!(doc.data_line_count(), 2);
    }

    #[test]
    fn comments_are_exempt_from_spine_checks() {
        let text = "!! global comment\n**kern\t**kern\n! one cell local note\n4c\t4d\n*-\t*-\n";
        let doc = parse_kern(text).unwrap();
        assert_eq!(doc.spine_count, 2);
    }
}
