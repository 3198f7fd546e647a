#![no_main]

use libfuzzer_sys::fuzz_target;
use morphic_bwt::Word;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(w) = Word::parse(text) else { return };
    let letters: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    assert_eq!(w.to_string(), letters);
    let again = Word::parse(&w.to_string()).unwrap();
    assert_eq!(again.symbols(), w.symbols());
});
