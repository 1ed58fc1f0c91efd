use crate::document::{KernDocument, LineKind};
use crate::error::KernError;

/// Component kinds of a **kern data symbol, in canonical order.
///
/// Canonical order: duration digits (with dots), pitch letters or rest,
/// accidentals, tie/slur opens, beam markers, ornaments, tie/slur closes.
/// `Other` covers the null symbol `.` and never mixes with the rest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ComponentKind {
    Duration,
    Pitch,
    Rest,
    Accidental,
    TieOpen,
    SlurOpen,
    BeamOpen,
    BeamClose,
    Ornament,
    SlurClose,
    TieClose,
    Other,
}

impl ComponentKind {
    /// Position of the kind in the canonical symbol layout. Pitch and rest
    /// share a slot; opens of ties and slurs share a slot, as do closes.
    fn canonical_slot(self) -> u8 {
        match self {
            ComponentKind::Duration => 0,
            ComponentKind::Pitch | ComponentKind::Rest => 1,
            ComponentKind::Accidental => 2,
            ComponentKind::TieOpen | ComponentKind::SlurOpen => 3,
            ComponentKind::BeamOpen | ComponentKind::BeamClose => 4,
            ComponentKind::Ornament => 5,
            ComponentKind::SlurClose | ComponentKind::TieClose => 6,
            ComponentKind::Other => 7,
        }
    }
}

/// One spine cell decomposed into typed components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernSymbol {
    pub raw: String,
    pub components: Vec<(ComponentKind, String)>,
}

const ORNAMENTS: &[char] = &[';', '\'', '^', '~', ':', 't', 'T', 'm', 'M', 'w', 'W'];

impl KernSymbol {
    /// Decompose a data cell with the component grammar. Order in the input
    /// is free; [`KernSymbol::canonical`] restores the canonical order.
    pub fn parse(raw: &str) -> Result<Self, KernError> {
        Self::parse_at_line(raw, 0)
    }

    fn parse_at_line(raw: &str, line: usize) -> Result<Self, KernError> {
        if raw.is_empty() || raw.contains('\t') || raw.contains('\n') {
            return Err(KernError::DanglingFragment { cell: raw.into() });
        }
        // Null symbol: a lone placeholder, no musical content.
        if raw == "." {
            return Ok(Self {
                raw: raw.into(),
                components: vec![(ComponentKind::Other, raw.into())],
            });
        }

        let mut components: Vec<(ComponentKind, String)> = Vec::new();
        let chars: Vec<char> = raw.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            match c {
                '0'..='9' => {
                    let mut text = String::new();
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        text.push(chars[i]);
                        i += 1;
                    }
                    // Dots of prolongation belong to the duration component.
                    while i < chars.len() && chars[i] == '.' {
                        text.push(chars[i]);
                        i += 1;
                    }
                    components.push((ComponentKind::Duration, text));
                }
                'a'..='g' | 'A'..='G' => {
                    let mut text = String::new();
                    while i < chars.len() && chars[i] == c {
                        text.push(chars[i]);
                        i += 1;
                    }
                    components.push((ComponentKind::Pitch, text));
                }
                'r' => {
                    let mut text = String::new();
                    while i < chars.len() && chars[i] == 'r' {
                        text.push(chars[i]);
                        i += 1;
                    }
                    components.push((ComponentKind::Rest, text));
                }
                '-' | '#' | 'n' => {
                    let mut text = String::new();
                    while i < chars.len() && chars[i] == c {
                        text.push(chars[i]);
                        i += 1;
                    }
                    components.push((ComponentKind::Accidental, text));
                }
                '[' | '_' => {
                    components.push((ComponentKind::TieOpen, c.to_string()));
                    i += 1;
                }
                ']' => {
                    components.push((ComponentKind::TieClose, c.to_string()));
                    i += 1;
                }
                '(' => {
                    components.push((ComponentKind::SlurOpen, c.to_string()));
                    i += 1;
                }
                ')' => {
                    components.push((ComponentKind::SlurClose, c.to_string()));
                    i += 1;
                }
                'L' => {
                    components.push((ComponentKind::BeamOpen, c.to_string()));
                    i += 1;
                }
                'J' => {
                    components.push((ComponentKind::BeamClose, c.to_string()));
                    i += 1;
                }
                c if ORNAMENTS.contains(&c) => {
                    components.push((ComponentKind::Ornament, c.to_string()));
                    i += 1;
                }
                other => {
                    return Err(KernError::UnknownComponent {
                        symbol: raw.into(),
                        character: other,
                        line,
                    });
                }
            }
        }
        Ok(Self {
            raw: raw.into(),
            components,
        })
    }

    /// The canonical text: components stably sorted by canonical slot.
    pub fn canonical(&self) -> String {
        let mut ordered: Vec<&(ComponentKind, String)> = self.components.iter().collect();
        ordered.sort_by_key(|(kind, _)| kind.canonical_slot());
        ordered.iter().map(|(_, text)| text.as_str()).collect()
    }
}

/// Normalize one symbol text into canonical component order.
pub fn normalize_symbol(raw: &str) -> Result<String, KernError> {
    Ok(KernSymbol::parse(raw)?.canonical())
}

/// Rewrite every data symbol of the document into canonical component order
/// and drop comment lines. Interpretation, barline and null cells pass
/// through unchanged. Idempotent.
pub fn normalize(doc: &KernDocument) -> Result<KernDocument, KernError> {
    let mut lines = Vec::with_capacity(doc.lines.len());
    for (idx, line) in doc.lines.iter().enumerate() {
        match line.kind {
            LineKind::Comment => continue,
            LineKind::Data => {
                let mut cells = Vec::with_capacity(line.cells.len());
                for cell in &line.cells {
                    let sym = KernSymbol::parse_at_line(cell, idx + 1)?;
                    cells.push(sym.canonical());
                }
                lines.push(crate::document::KernLine::new(cells, line.kind));
            }
            _ => lines.push(line.clone()),
        }
    }
    Ok(KernDocument {
        lines,
        spine_count: doc.spine_count,
    })
}
