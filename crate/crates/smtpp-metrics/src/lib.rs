//! Transcription metrics at three granularities, all defined as the edit
//! distance between hypothesis and reference divided by the reference
//! length:
//!
//! - CER compares minimum semantic units (bekern tokens),
//! - SER compares whole symbols (kern cells plus `<t>`/`<b>` markers),
//! - LER compares whole document lines.
//!
//! Hypothesis and reference are converted to a common encoding before
//! comparison, so results do not depend on the scheme a model was trained
//! with. Conversion goes through the document round trip when the sequence
//! forms a valid document; otherwise a structural regrouping of the token
//! stream is used, so a malformed hypothesis still scores instead of
//! erroring out.

mod regroup;
mod report;

pub use report::EvalReport;

use smtpp_kern::{convert, EncodingScheme, TokenSequence};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MetricsError {
    #[error("reference sequence is empty")]
    EmptyReference,
    #[error("corpus has no documents")]
    EmptyCorpus,
}

/// Levenshtein distance with unit insert/delete/substitute costs.
/// Two-row dynamic program, O(min(|a|,|b|)) memory.
pub fn edit_distance<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    if a.is_empty() {
        return b.len();
    }
    if b.is_empty() {
        return a.len();
    }
    let (short, long) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut prev: Vec<usize> = (0..=short.len()).collect();
    let mut curr = vec![0usize; short.len() + 1];
    for (i, lt) in long.iter().enumerate() {
        curr[0] = i + 1;
        for (j, st) in short.iter().enumerate() {
            let cost = usize::from(lt != st);
            curr[j + 1] = (prev[j + 1] + 1).min(curr[j] + 1).min(prev[j] + cost);
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    prev[short.len()]
}

fn ratio(distance: usize, ref_len: usize) -> Result<f64, MetricsError> {
    if ref_len == 0 {
        return Err(MetricsError::EmptyReference);
    }
    Ok(distance as f64 / ref_len as f64)
}

/// Tokens of `seq` under `target`, preferring the exact document round trip
/// and falling back to structural regrouping.
fn tokens_as(seq: &TokenSequence, target: EncodingScheme) -> Vec<String> {
    match convert(seq, target) {
        Ok(converted) => converted.tokens,
        Err(_) => regroup::retokenize(seq, target),
    }
}

/// Character error rate over minimum semantic units: both sequences are
/// compared at the bekern granularity.
pub fn cer(hyp: &TokenSequence, reference: &TokenSequence) -> Result<f64, MetricsError> {
    let h = tokens_as(hyp, EncodingScheme::Bekern);
    let r = tokens_as(reference, EncodingScheme::Bekern);
    ratio(edit_distance(&h, &r), r.len())
}

/// Symbol error rate: evaluation tokens are whole kern cells plus the
/// `<t>`/`<b>` markers.
pub fn ser(hyp: &TokenSequence, reference: &TokenSequence) -> Result<f64, MetricsError> {
    let h = tokens_as(hyp, EncodingScheme::Kern);
    let r = tokens_as(reference, EncodingScheme::Kern);
    ratio(edit_distance(&h, &r), r.len())
}

/// Line error rate: each full document line (the text between `<b>`
/// markers) is one evaluation token. Comment lines never survive
/// tokenization, so every remaining line counts.
pub fn ler(hyp: &TokenSequence, reference: &TokenSequence) -> Result<f64, MetricsError> {
    let h = regroup::line_texts(hyp);
    let r = regroup::line_texts(reference);
    ratio(edit_distance(&h, &r), r.len())
}

/// Per-document metrics plus unweighted corpus means. Pairs are
/// `(document id, hypothesis, reference)`.
pub fn evaluate_corpus(
    pairs: &[(String, TokenSequence, TokenSequence)],
) -> Result<EvalReport, MetricsError> {
    if pairs.is_empty() {
        return Err(MetricsError::EmptyCorpus);
    }
    let mut per_document = Vec::with_capacity(pairs.len());
    for (id, hyp, reference) in pairs {
        per_document.push((
            id.clone(),
            cer(hyp, reference)?,
            ser(hyp, reference)?,
            ler(hyp, reference)?,
        ));
    }
    let n = per_document.len() as f64;
    let cer = per_document.iter().map(|d| d.1).sum::<f64>() / n;
    let ser = per_document.iter().map(|d| d.2).sum::<f64>() / n;
    let ler = per_document.iter().map(|d| d.3).sum::<f64>() / n;
    Ok(EvalReport {
        cer,
        ser,
        ler,
        per_document,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use smtpp_kern::{normalize, parse_kern, tokenize};

    fn seq(tokens: &[&str], scheme: EncodingScheme) -> TokenSequence {
        TokenSequence::new(tokens.iter().map(|s| s.to_string()).collect(), scheme)
    }

    fn doc_tokens(text: &str, scheme: EncodingScheme) -> TokenSequence {
        tokenize(&normalize(&parse_kern(text).unwrap()).unwrap(), scheme).unwrap()
    }

    #[test]
    fn distance_basics() {
        let a: Vec<&str> = vec!["a", "b", "c"];
        assert_eq!(edit_distance(&a, &a), 0);
        assert_eq!(
            edit_distance(&["8", "e", "-", "J"], &["8", "e", "J"]),
            1,
            "single deletion"
        );
        assert_eq!(edit_distance::<&str>(&[], &a), 3);
    }

    #[test]
    fn distance_symmetry_and_triangle() {
        let xs = [
            vec!["a"],
            vec!["a", "b"],
            vec!["b", "b", "a"],
            vec![],
            vec!["c", "a", "b", "a"],
        ];
        for x in &xs {
            for y in &xs {
                assert_eq!(edit_distance(x, y), edit_distance(y, x));
                if x == y {
                    assert_eq!(edit_distance(x, y), 0);
                } else {
                    assert!(edit_distance(x, y) > 0);
                }
                for z in &xs {
                    assert!(
                        edit_distance(x, z) <= edit_distance(x, y) + edit_distance(y, z),
                        "triangle inequality violated"
                    );
                }
            }
        }
    }

    #[test]
    fn identical_inputs_zero_at_all_granularities() {
        let reference = doc_tokens(
            "**kern\t**kern\n*M4/4\t*M4/4\n=1\t=1\n4C\t8e-J\n*-\t*-\n",
            EncodingScheme::Ekern,
        );
        assert_eq!(cer(&reference, &reference).unwrap(), 0.0);
        assert_eq!(ser(&reference, &reference).unwrap(), 0.0);
        assert_eq!(ler(&reference, &reference).unwrap(), 0.0);
    }

    #[test]
    fn cer_single_substitution_over_four_tokens() {
        let r = seq(&["8", "e", "-", "J"], EncodingScheme::Bekern);
        let h = seq(&["8", "f", "-", "J"], EncodingScheme::Bekern);
        assert_eq!(cer(&h, &r).unwrap(), 0.25);
    }

    #[test]
    fn cer_scheme_invariance() {
        let ref_text = "**kern\t**kern\n*M4/4\t*M4/4\n=1\t=1\n4C\t8ccL\n.\t8b-J\n*-\t*-\n";
        let hyp_text = "**kern\t**kern\n*M4/4\t*M4/4\n=1\t=1\n4C\t8ccL\n.\t8bnJ\n*-\t*-\n";
        let mut values = Vec::new();
        for scheme in [
            EncodingScheme::Kern,
            EncodingScheme::Ekern,
            EncodingScheme::Bekern,
        ] {
            let h = doc_tokens(hyp_text, scheme);
            let r = doc_tokens(ref_text, scheme);
            values.push(cer(&h, &r).unwrap());
        }
        assert_eq!(values[0], values[1]);
        assert_eq!(values[1], values[2]);
        assert!(values[0] > 0.0);
    }

    #[test]
    fn ser_counts_cell_level_substitution() {
        let r = seq(&["8e-J", "<t>", "4c"], EncodingScheme::Kern);
        let h = seq(&["8e-J", "<t>", "4d"], EncodingScheme::Kern);
        assert!((ser(&h, &r).unwrap() - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn ler_detects_missing_line() {
        let mut ref_text = String::from("**kern\n*M4/4\n");
        for i in 1..=4 {
            ref_text.push_str(&format!("={i}\n4c\n"));
        }
        ref_text.push_str("*-\n");
        let hyp_text = ref_text.replace("=4\n4c\n", "=4\n");
        let h = doc_tokens(&hyp_text, EncodingScheme::Bekern);
        let r = doc_tokens(&ref_text, EncodingScheme::Bekern);
        let r_lines = 11.0; // header + meter + 4*(barline+note) + terminator
        assert!((ler(&h, &r).unwrap() - 1.0 / r_lines).abs() < 1e-12);
        assert_eq!(ler(&r, &r).unwrap(), 0.0);
    }

    #[test]
    fn empty_hypothesis_gives_ratio_one() {
        let reference = doc_tokens("**kern\n=1\n4c\n8dL\n8eJ\n*-\n", EncodingScheme::Bekern);
        let empty = seq(&[], EncodingScheme::Bekern);
        assert_eq!(cer(&empty, &reference).unwrap(), 1.0);
        assert_eq!(ser(&empty, &reference).unwrap(), 1.0);
        assert_eq!(ler(&empty, &reference).unwrap(), 1.0);
    }

    #[test]
    fn malformed_hypothesis_still_scores() {
        let reference = doc_tokens("**kern\n=1\n4c\n4d\n*-\n", EncodingScheme::Bekern);
        // truncated output with no terminator and a garbage fragment
        let h = seq(&["**kern", "<b>", "=", "1", "<b>", "4", "?"], EncodingScheme::Bekern);
        let c = cer(&h, &reference).unwrap();
        assert!(c > 0.0 && c < 1.0);
        assert!(ser(&h, &reference).unwrap() > 0.0);
        assert!(ler(&h, &reference).unwrap() > 0.0);
    }

    #[test]
    fn empty_reference_is_an_error() {
        let h = seq(&["8"], EncodingScheme::Bekern);
        let r = seq(&[], EncodingScheme::Bekern);
        assert_eq!(cer(&h, &r), Err(MetricsError::EmptyReference));
        assert_eq!(ser(&h, &r), Err(MetricsError::EmptyReference));
        assert_eq!(ler(&h, &r), Err(MetricsError::EmptyReference));
    }

    #[test]
    fn corpus_mean_is_unweighted() {
        let d1 = "**kern\n=1\n4c\n4d\n4e\n4f\n*-\n";
        let d2 = "**kern\n=1\n8cL\n8dJ\n*-\n";
        let pairs = vec![
            (
                "a".to_string(),
                doc_tokens(d1, EncodingScheme::Bekern),
                doc_tokens(d1, EncodingScheme::Bekern),
            ),
            (
                "b".to_string(),
                doc_tokens(d2, EncodingScheme::Bekern),
                doc_tokens(d2, EncodingScheme::Bekern),
            ),
        ];
        let report = evaluate_corpus(&pairs).unwrap();
        assert_eq!(report.cer, 0.0);
        assert_eq!(report.ser, 0.0);
        assert_eq!(report.ler, 0.0);
        assert_eq!(report.per_document.len(), 2);
    }

    #[test]
    fn empty_corpus_is_an_error() {
        assert!(matches!(
            evaluate_corpus(&[]),
            Err(MetricsError::EmptyCorpus)
        ));
    }
}
