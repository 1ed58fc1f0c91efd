//! Structural regrouping of token streams that do not form valid documents.
//!
//! Model output can be truncated or ungrammatical; evaluation must still
//! score it. The functions here reassemble cells from runs of fragment
//! tokens between `<t>`/`<b>` markers and re-split them for the target
//! granularity, without requiring a parseable document.

use smtpp_kern::{EncodingScheme, TokenSequence, TOKEN_BREAK, TOKEN_TAB};

const CONTROL_SKIP: [&str; 3] = ["<sot>", "<eot>", "<pad>"];

/// Cells of each line, reassembled textually. `<sot>`/`<eot>`/`<pad>` are
/// ignored; a trailing line without `<b>` is kept.
fn lines_of(seq: &TokenSequence) -> Vec<Vec<String>> {
    let mut lines = Vec::new();
    let mut cells: Vec<String> = Vec::new();
    let mut cell = String::new();
    let mut open = false;
    for tok in &seq.tokens {
        match tok.as_str() {
            t if CONTROL_SKIP.contains(&t) => {}
            TOKEN_TAB => {
                cells.push(std::mem::take(&mut cell));
                open = false;
            }
            TOKEN_BREAK => {
                cells.push(std::mem::take(&mut cell));
                open = false;
                lines.push(std::mem::take(&mut cells));
            }
            fragment => {
                cell.push_str(fragment);
                open = true;
            }
        }
    }
    if open || !cells.is_empty() {
        cells.push(cell);
        lines.push(cells);
    }
    lines
}

/// Re-split one reassembled cell at the target granularity; ungrammatical
/// cells are kept as single opaque tokens.
fn cell_tokens(cell: &str, target: EncodingScheme) -> Vec<String> {
    smtpp_kern::split_cell(cell, target).unwrap_or_else(|_| vec![cell.to_string()])
}

/// Token stream re-expressed at the target granularity, preserving the
/// `<t>`/`<b>` structure.
pub fn retokenize(seq: &TokenSequence, target: EncodingScheme) -> Vec<String> {
    let mut out = Vec::new();
    for cells in lines_of(seq) {
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                out.push(TOKEN_TAB.to_string());
            }
            if !cell.is_empty() {
                out.extend(cell_tokens(cell, target));
            }
        }
        out.push(TOKEN_BREAK.to_string());
    }
    // the loop appends a break after the trailing partial line too; drop it
    // when the stream did not end with one
    let ended_with_break = seq
        .tokens
        .iter()
        .rev()
        .find(|t| !CONTROL_SKIP.contains(&t.as_str()))
        .map(|t| t == TOKEN_BREAK)
        .unwrap_or(true);
    if !ended_with_break {
        out.pop();
    }
    out
}

/// One text per line: cells joined by tabs.
pub fn line_texts(seq: &TokenSequence) -> Vec<String> {
    lines_of(seq)
        .into_iter()
        .map(|cells| cells.join("\t"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(tokens: &[&str], scheme: EncodingScheme) -> TokenSequence {
        TokenSequence::new(tokens.iter().map(|s| s.to_string()).collect(), scheme)
    }

    #[test]
    fn regroup_agrees_with_exact_conversion_on_valid_documents() {
        let text = "**kern\t**kern\n*M4/4\t*M4/4\n=1\t=1\n4C\t8e-J\n.\t8fL\n*-\t*-\n";
        let doc =
            smtpp_kern::normalize(&smtpp_kern::parse_kern(text).unwrap()).unwrap();
        for source in [EncodingScheme::Kern, EncodingScheme::Ekern, EncodingScheme::Bekern] {
            let tokens = smtpp_kern::tokenize(&doc, source).unwrap();
            for target in [EncodingScheme::Kern, EncodingScheme::Ekern, EncodingScheme::Bekern] {
                let exact = smtpp_kern::convert(&tokens, target).unwrap().tokens;
                let structural = retokenize(&tokens, target);
                assert_eq!(exact, structural, "{source} -> {target}");
            }
        }
    }

    #[test]
    fn truncated_stream_keeps_partial_line() {
        let s = seq(&["**kern", "<b>", "4", "c"], EncodingScheme::Bekern);
        let lines = line_texts(&s);
        assert_eq!(lines, vec!["**kern", "4c"]);
        let kern = retokenize(&s, EncodingScheme::Kern);
        assert_eq!(kern, vec!["**kern", "<b>", "4c"]);
    }

    #[test]
    fn garbage_cell_is_opaque() {
        let s = seq(&["4", "?", "<b>"], EncodingScheme::Bekern);
        assert_eq!(retokenize(&s, EncodingScheme::Kern), vec!["4?", "<b>"]);
    }
}
