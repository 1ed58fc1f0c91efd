use crate::document::{KernDocument, KernLine, LineKind};
use crate::error::KernError;
use crate::symbol::{ComponentKind, KernSymbol};
use crate::vocab::{TOKEN_BREAK, TOKEN_TAB};

/// Output encoding scheme for token sequences.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EncodingScheme {
    /// Complete symbols as single tokens.
    Kern,
    /// Split by graphical meaning: duration and pitch fused, marks separate.
    Ekern,
    /// Split into minimum semantic elements.
    Bekern,
}

impl EncodingScheme {
    pub fn name(self) -> &'static str {
        match self {
            EncodingScheme::Kern => "kern",
            EncodingScheme::Ekern => "ekern",
            EncodingScheme::Bekern => "bekern",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "kern" => Some(EncodingScheme::Kern),
            "ekern" => Some(EncodingScheme::Ekern),
            "bekern" => Some(EncodingScheme::Bekern),
            _ => None,
        }
    }
}

impl std::fmt::Display for EncodingScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A scheme-tagged token stream. Spine boundaries within a line are `<t>`,
/// line boundaries are `<b>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenSequence {
    pub tokens: Vec<String>,
    pub scheme: EncodingScheme,
}

impl TokenSequence {
    pub fn new(tokens: Vec<String>, scheme: EncodingScheme) -> Self {
        Self { tokens, scheme }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }
}

/// Split a data cell into minimum semantic elements. The duration component
/// further splits into its digit run and one token per prolongation dot;
/// every other component is one element.
fn bekern_elements(sym: &KernSymbol) -> Vec<String> {
    let mut out = Vec::new();
    for (kind, text) in &sym.components {
        match kind {
            ComponentKind::Duration => {
                let digits: String = text.chars().take_while(|c| c.is_ascii_digit()).collect();
                if !digits.is_empty() {
                    out.push(digits);
                }
                for c in text.chars().skip_while(|c| c.is_ascii_digit()) {
                    out.push(c.to_string());
                }
            }
            _ => out.push(text.clone()),
        }
    }
    out
}

/// Split a data cell by graphical meaning: the duration (with dots) fuses
/// with the following pitch or rest into one token; marks stay separate.
fn ekern_elements(sym: &KernSymbol) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    let mut pending_duration: Option<String> = None;
    for (kind, text) in &sym.components {
        match kind {
            ComponentKind::Duration => {
                if let Some(prev) = pending_duration.take() {
                    out.push(prev);
                }
                pending_duration = Some(text.clone());
            }
            ComponentKind::Pitch | ComponentKind::Rest => {
                if let Some(dur) = pending_duration.take() {
                    out.push(format!("{dur}{text}"));
                } else {
                    out.push(text.clone());
                }
            }
            _ => out.push(text.clone()),
        }
    }
    if let Some(dur) = pending_duration {
        out.push(dur);
    }
    out
}

/// Tokenize a barline cell. Under bekern the `=` and each digit are separate
/// elements so measure numbers never inflate the vocabulary.
fn barline_tokens(cell: &str, scheme: EncodingScheme) -> Vec<String> {
    match scheme {
        EncodingScheme::Bekern => {
            let mut out = vec!["=".to_string()];
            for c in cell.chars().skip(1) {
                out.push(c.to_string());
            }
            out
        }
        _ => vec![cell.to_string()],
    }
}

/// Split one cell text into scheme tokens, classifying it the way a line
/// would be (interpretation, barline or data).
pub fn split_cell(cell: &str, scheme: EncodingScheme) -> Result<Vec<String>, KernError> {
    let kind = if cell.starts_with('*') {
        LineKind::TandemInterpretation
    } else if cell.starts_with('=') {
        LineKind::Barline
    } else {
        LineKind::Data
    };
    cell_tokens(cell, kind, scheme, 0)
}

fn cell_tokens(
    cell: &str,
    kind: LineKind,
    scheme: EncodingScheme,
    line: usize,
) -> Result<Vec<String>, KernError> {
    match kind {
        // Interpretations are instructions, not engraved symbols; they stay
        // whole under every scheme.
        LineKind::ExclusiveInterpretation | LineKind::TandemInterpretation | LineKind::Terminator => {
            Ok(vec![cell.to_string()])
        }
        LineKind::Barline => Ok(barline_tokens(cell, scheme)),
        LineKind::Data => {
            if cell == "." || scheme == EncodingScheme::Kern {
                return Ok(vec![cell.to_string()]);
            }
            let sym = KernSymbol::parse(cell).map_err(|e| match e {
                KernError::UnknownComponent {
                    symbol, character, ..
                } => KernError::UnknownComponent {
                    symbol,
                    character,
                    line,
                },
                other => other,
            })?;
            Ok(match scheme {
                EncodingScheme::Ekern => ekern_elements(&sym),
                EncodingScheme::Bekern => bekern_elements(&sym),
                EncodingScheme::Kern => unreachable!(),
            })
        }
        LineKind::Comment => Ok(Vec::new()),
    }
}

/// Convert a normalized document into a token sequence. Cells within a line
/// are separated by `<t>`, every line ends with `<b>`. Comment lines emit
/// nothing.
pub fn tokenize(doc: &KernDocument, scheme: EncodingScheme) -> Result<TokenSequence, KernError> {
    let mut tokens = Vec::new();
    for (idx, line) in doc.lines.iter().enumerate() {
        if line.kind == LineKind::Comment {
            continue;
        }
        for (c, cell) in line.cells.iter().enumerate() {
            if c > 0 {
                tokens.push(TOKEN_TAB.to_string());
            }
            tokens.extend(cell_tokens(cell, line.kind, scheme, idx + 1)?);
        }
        tokens.push(TOKEN_BREAK.to_string());
    }
    Ok(TokenSequence::new(tokens, scheme))
}

/// Rebuild a document from a token sequence. Runs of non-markup tokens
/// between `<t>`/`<b>` markers concatenate into one cell; fragments must
/// reassemble into grammatical symbols.
pub fn detokenize(seq: &TokenSequence) -> Result<KernDocument, KernError> {
    if seq.tokens.is_empty() {
        return crate::document::parse_kern("**kern\n*-\n");
    }

    let mut lines: Vec<KernLine> = Vec::new();
    let mut cells: Vec<String> = Vec::new();
    let mut fragment = String::new();
    let mut fragment_open = false;

    let flush_cell = |cells: &mut Vec<String>,
                      fragment: &mut String,
                      fragment_open: &mut bool|
     -> Result<(), KernError> {
        if !*fragment_open {
            return Err(KernError::DanglingFragment {
                cell: String::new(),
            });
        }
        cells.push(std::mem::take(fragment));
        *fragment_open = false;
        Ok(())
    };

    for tok in &seq.tokens {
        match tok.as_str() {
            t if t == crate::vocab::TOKEN_SOT || t == crate::vocab::TOKEN_EOT => continue,
            t if t == crate::vocab::TOKEN_PAD => continue,
            t if t == TOKEN_TAB => {
                flush_cell(&mut cells, &mut fragment, &mut fragment_open)?;
            }
            t if t == TOKEN_BREAK => {
                flush_cell(&mut cells, &mut fragment, &mut fragment_open)?;
                let kind = classify_cells(&cells);
                validate_cells(&cells, kind, seq.scheme)?;
                lines.push(KernLine::new(std::mem::take(&mut cells), kind));
            }
            fragment_tok => {
                fragment.push_str(fragment_tok);
                fragment_open = true;
            }
        }
    }
    if fragment_open || !cells.is_empty() {
        // Stream without final <b>: accept the trailing line.
        flush_cell(&mut cells, &mut fragment, &mut fragment_open)?;
        let kind = classify_cells(&cells);
        validate_cells(&cells, kind, seq.scheme)?;
        lines.push(KernLine::new(cells, kind));
    }

    let text: String = lines
        .iter()
        .map(|l| format!("{}\n", l.text()))
        .collect();
    crate::document::parse_kern(&text)
}

fn classify_cells(cells: &[String]) -> LineKind {
    if cells.is_empty() {
        return LineKind::Data;
    }
    let first = cells[0].as_str();
    if cells.iter().all(|c| c == "*-") {
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

fn validate_cells(
    cells: &[String],
    kind: LineKind,
    scheme: EncodingScheme,
) -> Result<(), KernError> {
    if kind != LineKind::Data || scheme == EncodingScheme::Kern {
        return Ok(());
    }
    for cell in cells {
        if cell == "." {
            continue;
        }
        KernSymbol::parse(cell).map_err(|_| KernError::DanglingFragment { cell: cell.clone() })?;
    }
    Ok(())
}

/// Re-encode a token sequence under another scheme. Semantics-preserving:
/// the detokenized documents of input and output are equal.
pub fn convert(seq: &TokenSequence, target: EncodingScheme) -> Result<TokenSequence, KernError> {
    if seq.scheme == target {
        return Ok(seq.clone());
    }
    let doc = detokenize(seq)?;
    tokenize(&doc, target)
}
