#![no_main]

use libfuzzer_sys::fuzz_target;
use morphic_bwt::Morphism;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(m) = Morphism::parse(text) else { return };
    let back = Morphism::parse(&m.to_spec()).expect("rendered spec parses");
    assert_eq!(back, m);
    assert_eq!(back.digest(), m.digest());
    if let Some(a) = m.prolongable_letter() {
        if let Ok(w) = m.iterate(a, 3, 4096) {
            assert_eq!(num_len(&m, a), w.len());
        }
    }
});

fn num_len(m: &Morphism, a: u8) -> usize {
    m.length(a, 3).try_into().expect("under the cap")
}
