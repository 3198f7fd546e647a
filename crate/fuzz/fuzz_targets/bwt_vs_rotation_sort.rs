#![no_main]

use libfuzzer_sys::fuzz_target;
use morphic_bwt::analysis::bwt_symbols;

fuzz_target!(|data: &[u8]| {
    if data.is_empty() || data.len() > 256 {
        return;
    }
    let k = data[0] % 4 + 1;
    let s: Vec<u8> = data[1..].iter().map(|b| b % k).collect();
    if s.is_empty() {
        return;
    }
    let n = s.len();
    let mut rotations: Vec<Vec<u8>> = (0..n).map(|i| s[i..].iter().chain(&s[..i]).copied().collect()).collect();
    rotations.sort();
    let expected: Vec<u8> = rotations.iter().map(|r| r[n - 1]).collect();
    assert_eq!(bwt_symbols(&s), expected);

    let shift = data[0] as usize % n;
    let rotated: Vec<u8> = s[shift..].iter().chain(&s[..shift]).copied().collect();
    assert_eq!(bwt_symbols(&rotated), expected);
});
