//! Built-in morphism specs, embedded at compile time.

use crate::morphism::Morphism;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub spec: &'static str,
}

impl CorpusEntry {
    pub fn morphism(&self) -> Morphism {
        Morphism::parse(self.spec).expect("built-in specs parse")
    }
}

macro_rules! entry {
    ($name:literal) => {
        CorpusEntry { name: $name, spec: include_str!(concat!("../../corpus/", $name, ".mrf")) }
    };
}

pub fn builtin_corpus() -> Vec<CorpusEntry> {
    vec![
        entry!("tm"),
        entry!("fibonacci"),
        entry!("phi"),
        entry!("psi"),
        entry!("eta"),
        entry!("phi3"),
        entry!("phi4"),
        entry!("phi5"),
        entry!("aab_b"),
        entry!("abba_b"),
        entry!("abkb"),
        entry!("aba_b"),
    ]
}
