/// Corpus evaluation results: unweighted means plus per-document rows.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalReport {
    pub cer: f64,
    pub ser: f64,
    pub ler: f64,
    /// `(document id, cer, ser, ler)` per evaluated pair.
    pub per_document: Vec<(String, f64, f64, f64)>,
}

impl EvalReport {
    /// Line-oriented plain-text table: one row per document plus the mean.
    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let id_width = self
            .per_document
            .iter()
            .map(|d| d.0.len())
            .chain(std::iter::once("document".len()))
            .max()
            .unwrap_or(8);
        out.push_str(&format!(
            "{:<id_width$}  {:>8}  {:>8}  {:>8}\n",
            "document", "CER", "SER", "LER"
        ));
        for (id, cer, ser, ler) in &self.per_document {
            out.push_str(&format!(
                "{id:<id_width$}  {cer:>8.4}  {ser:>8.4}  {ler:>8.4}\n"
            ));
        }
        out.push_str(&format!(
            "{:<id_width$}  {:>8.4}  {:>8.4}  {:>8.4}\n",
            "mean", self.cer, self.ser, self.ler
        ));
        out
    }

    /// Machine-readable key=value block.
    pub fn render_kv(&self) -> String {
        format!(
            "documents={}\ncer={:.6}\nser={:.6}\nler={:.6}\n",
            self.per_document.len(),
            self.cer,
            self.ser,
            self.ler
        )
    }
}
