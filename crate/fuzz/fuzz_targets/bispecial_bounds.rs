#![no_main]

use libfuzzer_sys::fuzz_target;
use morphic_bwt::analysis::r_set;
use morphic_bwt::harness::check_bispecial_run_bounds;
use morphic_bwt::{Alphabet, Word};

fuzz_target!(|data: &[u8]| {
    // one letter per bit, capped at 512 letters
    let s: Vec<u8> = data.iter().take(64).flat_map(|b| (0..8).map(move |j| (b >> j) & 1)).collect();
    if s.is_empty() {
        return;
    }
    let w = Word::from_ranks(Alphabet::new(['a', 'b']).unwrap(), s.clone());
    let v = check_bispecial_run_bounds(&w, usize::MAX).unwrap();
    assert!(v.passed(), "{v:?}");

    if let Ok(set) = r_set(&w, 0) {
        let n = s.len();
        let positions: Vec<usize> = (0..n).filter(|&p| s[p] == 0).collect();
        for (j, &p) in positions.iter().enumerate() {
            let next = positions.get(j + 1).copied().unwrap_or(positions[0] + n);
            assert!(set.contains(&(next - p - 1)));
        }
        assert!(set.len() <= positions.len());
    }
});
