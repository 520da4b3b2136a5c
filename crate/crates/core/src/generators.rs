//! String families: Gray-code block strings, power-block families with known
//! exact parsing sizes, the recursive doubling family, Thue-Morse prefixes,
//! unary block strings, and seeded random texts.

use crate::error::{Error, Result};
use crate::text::Text;

/// Upper bound on generated text length.
pub const GEN_GUARD: usize = 1 << 26;

/// Memory guard for `gray_code`: at most this many words.
pub const GRAY_GUARD: u64 = 1 << 22;

/// Closed enumeration of the generator families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyId {
    UnaryBlocks,
    GrayBlocks,
    PowersA,
    PowersB,
    PowersC,
    AbPower,
    Recursive,
    ThueMorse,
    Random,
}

impl FamilyId {
    pub const ALL: [FamilyId; 9] = [
        FamilyId::UnaryBlocks,
        FamilyId::GrayBlocks,
        FamilyId::PowersA,
        FamilyId::PowersB,
        FamilyId::PowersC,
        FamilyId::AbPower,
        FamilyId::Recursive,
        FamilyId::ThueMorse,
        FamilyId::Random,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FamilyId::UnaryBlocks => "unary-blocks",
            FamilyId::GrayBlocks => "gray-blocks",
            FamilyId::PowersA => "powers-a",
            FamilyId::PowersB => "powers-b",
            FamilyId::PowersC => "powers-c",
            FamilyId::AbPower => "ab-power",
            FamilyId::Recursive => "recursive",
            FamilyId::ThueMorse => "thue-morse",
            FamilyId::Random => "random",
        }
    }

    pub fn from_name(name: &str) -> Option<FamilyId> {
        FamilyId::ALL.into_iter().find(|f| f.name() == name)
    }
}

/// Reflected sigma-ary Gray code: all `sigma^d` length-`d` words, consecutive
/// words differing in exactly one position, starting at `zero_letter^d`.
/// Digit `h` of word `m` is `(m / sigma^h) % sigma`, reflected when the next
/// higher digit is odd; digit 0 and `zero_letter` are swapped in the output.
pub fn gray_code(sigma: u32, d: u32, zero_letter: u32) -> Result<Vec<Vec<u32>>> {
    if sigma < 2 || d < 1 {
        return Err(Error::InvalidParams(format!(
            "gray_code needs sigma >= 2 and d >= 1, got sigma={sigma} d={d}"
        )));
    }
    if zero_letter >= sigma {
        return Err(Error::InvalidParams(format!(
            "zero_letter {zero_letter} not below sigma {sigma}"
        )));
    }
    let count = (sigma as u64).checked_pow(d).filter(|&c| c <= GRAY_GUARD);
    let Some(count) = count else {
        return Err(Error::SizeLimit {
            n: usize::MAX,
            limit: GRAY_GUARD as usize,
        });
    };
    let remap = |g: u32| {
        if g == 0 {
            zero_letter
        } else if g == zero_letter {
            0
        } else {
            g
        }
    };
    let s = sigma as u64;
    let mut words = Vec::with_capacity(count as usize);
    for m in 0..count {
        let mut word = Vec::with_capacity(d as usize);
        for h in (0..d).rev() {
            let digit = (m / s.pow(h)) % s;
            let dir = (m / s.pow(h + 1)) % 2;
            let g = if dir == 0 { digit } else { s - 1 - digit };
            word.push(remap(g as u32));
        }
        words.push(word);
    }
    Ok(words)
}

/// Parameters for the Gray-code block construction ([`gen_thm2_string`]).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Thm2Params {
    pub n: usize,
    pub sigma: u32,
    pub z: usize,
    /// Word length: smallest d with sigma^d >= z.
    pub d: u32,
    /// Block count: z / 8.
    pub k: usize,
    /// Copies of u_i per block: n / (2kd).
    pub reps: usize,
}

impl Thm2Params {
    pub fn new(n: usize, sigma: u32, z: usize) -> Result<Self> {
        if sigma < 2 || (sigma as usize) > n {
            return Err(Error::InvalidParams(format!(
                "need 2 <= sigma <= n, got sigma={sigma} n={n}"
            )));
        }
        if z < sigma as usize {
            return Err(Error::InvalidParams(format!(
                "need z >= sigma, got z={z} sigma={sigma}"
            )));
        }
        let mut d = 1u32;
        while (sigma as u64).pow(d) < z as u64 {
            d += 1;
        }
        let k = z / 8;
        let reps = if k > 0 { n / (2 * k * d as usize) } else { 0 };
        if z > 8 && reps < 2 {
            return Err(Error::InvalidParams(format!(
                "block would repeat only {reps} times; need at least 2"
            )));
        }
        Ok(Thm2Params {
            n,
            sigma,
            z,
            d,
            k,
            reps,
        })
    }
}

/// Gray-code block string: `k` blocks, block `i` being `reps` copies of
/// `u_i = a b^(d-1) v_i` over the first `k` Gray words (`a` = symbol 1,
/// `b` = symbol 0), padded with `a` to length exactly `n`. For `z <= 8` the
/// construction degenerates to `a^n`.
pub fn gen_thm2_string(p: &Thm2Params) -> Result<Text> {
    if p.n > GEN_GUARD {
        return Err(Error::SizeLimit {
            n: p.n,
            limit: GEN_GUARD,
        });
    }
    if p.z <= 8 {
        return Text::new(vec![1; p.n], p.sigma);
    }
    let words = gray_code(p.sigma, p.d, 0)?;
    let mut syms = Vec::with_capacity(p.n);
    for v in words.iter().take(p.k) {
        let mut unit = Vec::with_capacity(2 * p.d as usize);
        unit.push(1);
        unit.extend(std::iter::repeat_n(0, p.d as usize - 1));
        unit.extend_from_slice(v);
        for _ in 0..p.reps {
            syms.extend_from_slice(&unit);
        }
    }
    debug_assert!(syms.len() <= p.n);
    syms.resize(p.n, 1);
    Text::new(syms, p.sigma)
}

fn letters_to_text(parts: &[(u32, usize)]) -> Result<Text> {
    let total: usize = parts.iter().map(|&(_, c)| c).sum();
    if total > GEN_GUARD {
        return Err(Error::SizeLimit {
            n: total,
            limit: GEN_GUARD,
        });
    }
    let mut syms = Vec::with_capacity(total);
    for &(letter, count) in parts {
        syms.extend(std::iter::repeat_n(letter, count));
    }
    let sigma = syms.iter().copied().max().map_or(0, |m| m + 1);
    Text::new(syms, sigma.max(2))
}

/// `aab . aab^3 . aab^7 ... aab^(2^(k-2)-1) . aab^(2^(k-2))`; its LZ and LZ3
/// sizes are exactly `2k-1` and `k`.
pub fn gen_powers_a(k: u32) -> Result<Text> {
    if !(2..=40).contains(&k) {
        return Err(Error::InvalidParams(format!("powers-a needs k >= 2, got {k}")));
    }
    let mut parts = Vec::new();
    for j in 1..=k.saturating_sub(2) {
        parts.push((0, 2));
        parts.push((1, (1usize << j) - 1));
    }
    parts.push((0, 2));
    parts.push((1, 1usize << (k - 2)));
    letters_to_text(&parts)
}

/// `abab^4 . abab^10 ... abab^(3*2^(k-1)-2)`; LZ and LZ3 sizes are both `2k`,
/// or `2k-1` when the final `b` run is shortened by `3*2^(k-2)`.
pub fn gen_powers_b(k: u32, truncated: bool) -> Result<Text> {
    if !(2..=40).contains(&k) {
        return Err(Error::InvalidParams(format!("powers-b needs k >= 2, got {k}")));
    }
    let mut parts = Vec::new();
    for j in 1..=k - 1 {
        parts.push((0, 1));
        parts.push((1, 1));
        parts.push((0, 1));
        parts.push((1, 3 * (1usize << j) - 2));
    }
    if truncated {
        let cut = 3 * (1usize << (k - 2));
        let last = parts.last_mut().expect("k >= 2 emits at least one block");
        last.1 -= cut;
    }
    letters_to_text(&parts)
}

/// `a^2 b . a^5 b^3 ... a^(3*2^(k-1)-1) b^(2^k - 1)` followed by the extra
/// pair `a^(3*2^k-1) b^(2^k)`; novLZ and novLZ3 sizes are `4k+3` and `2k+2`.
/// The truncated variant removes the final `a^(3*2^(k-1)-1) b^(2^k)` span
/// (the last nov-triple phrase), giving `4k+1` and `2k+1`.
pub fn gen_powers_c(k: u32, truncated: bool) -> Result<Text> {
    if !(1..=40).contains(&k) {
        return Err(Error::InvalidParams(format!("powers-c needs k >= 1, got {k}")));
    }
    let mut parts = Vec::new();
    for j in 1..=k {
        parts.push((0, 3 * (1usize << (j - 1)) - 1));
        parts.push((1, (1usize << j) - 1));
    }
    parts.push((0, 3 * (1usize << k) - 1));
    parts.push((1, 1usize << k));
    let text = letters_to_text(&parts)?;
    if !truncated {
        return Ok(text);
    }
    let cut = 3 * (1usize << (k - 1)) - 1 + (1usize << k);
    let keep = text.len() - cut;
    Text::new(text.symbols()[..keep].to_vec(), text.sigma())
}

/// `(ab)^(2^(k-2))`; novLZ and novLZ3 sizes are both exactly `k`.
pub fn gen_ab_power(k: u32) -> Result<Text> {
    if !(2..=40).contains(&k) {
        return Err(Error::InvalidParams(format!("ab-power needs k >= 2, got {k}")));
    }
    let reps = 1usize << (k - 2);
    if 2 * reps > GEN_GUARD {
        return Err(Error::SizeLimit {
            n: 2 * reps,
            limit: GEN_GUARD,
        });
    }
    let mut syms = Vec::with_capacity(2 * reps);
    for _ in 0..reps {
        syms.push(0);
        syms.push(1);
    }
    Text::new(syms, 2)
}

/// `s_1 = a_1`, `s_i = s_(i-1) s_(i-1) a_i` over `i` distinct letters;
/// `|s_i| = 2^i - 1`, pair sizes `2i-1`, triple sizes `i`.
pub fn gen_recursive(i: u32) -> Result<Text> {
    if !(1..=26).contains(&i) {
        return Err(Error::InvalidParams(format!(
            "recursive family needs 1 <= i <= 26, got {i}"
        )));
    }
    let mut syms: Vec<u32> = vec![0];
    for step in 1..i {
        let prev = syms.clone();
        syms.extend_from_slice(&prev);
        syms.push(step);
    }
    Text::new(syms, i)
}

/// Length-`n` prefix of the Thue-Morse word (symbol = parity of the popcount
/// of the position); overlap-free, so overlapping and non-overlapping
/// parsings coincide on it.
pub fn gen_thue_morse(n: usize) -> Text {
    let syms = (0..n).map(|i| i.count_ones() & 1).collect();
    Text::new(syms, 2).expect("symbols are bits")
}

/// `sigma` runs of `n / sigma` copies of each distinct letter, the last run
/// padded so the total length is exactly `n`.
pub fn gen_unary_blocks(n: usize, sigma: u32) -> Result<Text> {
    if sigma == 0 || (sigma as usize) > n {
        return Err(Error::InvalidParams(format!(
            "unary-blocks needs 1 <= sigma <= n, got sigma={sigma} n={n}"
        )));
    }
    if n > GEN_GUARD {
        return Err(Error::SizeLimit { n, limit: GEN_GUARD });
    }
    let block = n / sigma as usize;
    let mut syms = Vec::with_capacity(n);
    for letter in 0..sigma {
        syms.extend(std::iter::repeat_n(letter, block));
    }
    syms.resize(n, sigma - 1);
    Text::new(syms, sigma)
}

/// Deterministic pseudo-random text. The stream is splitmix64: the state
/// advances by 0x9E3779B97F4A7C15 per symbol and each output is finalized
/// with the xor-shift/multiply constants 0xBF58476D1CE4E5B9 and
/// 0x94D049BB133111EB; the symbol is the output modulo `sigma`. Fixed here
/// so any implementation can reproduce the same texts from a seed.
pub fn gen_random(n: usize, sigma: u32, seed: u64) -> Result<Text> {
    if sigma == 0 && n > 0 {
        return Err(Error::InvalidParams("random text needs sigma >= 1".into()));
    }
    if n > GEN_GUARD {
        return Err(Error::SizeLimit { n, limit: GEN_GUARD });
    }
    let mut rng = SplitMix64::new(seed);
    let syms = (0..n).map(|_| (rng.next() % sigma as u64) as u32).collect();
    Text::new(syms, sigma)
}

/// splitmix64; see `gen_random` for the exact constants.
pub(crate) struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut x = self.state;
        x = (x ^ (x >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        x = (x ^ (x >> 27)).wrapping_mul(0x94D049BB133111EB);
        x ^ (x >> 31)
    }
}

/// Untyped parameter bag for the CLI and harness dispatch.
#[derive(Debug, Clone, Default)]
pub struct FamilyParams {
    pub k: Option<u32>,
    pub n: Option<usize>,
    pub sigma: Option<u32>,
    pub z: Option<usize>,
    pub seed: Option<u64>,
    pub truncated: bool,
}

pub fn generate(id: FamilyId, p: &FamilyParams) -> Result<Text> {
    fn req<T: Copy>(id: FamilyId, name: &str, v: Option<T>) -> Result<T> {
        v.ok_or_else(|| Error::InvalidParams(format!("{} requires --{name}", id.name())))
    }
    match id {
        FamilyId::UnaryBlocks => {
            gen_unary_blocks(req(id, "n", p.n)?, req(id, "sigma", p.sigma)?)
        }
        FamilyId::GrayBlocks => {
            let params = Thm2Params::new(
                req(id, "n", p.n)?,
                req(id, "sigma", p.sigma)?,
                req(id, "z", p.z)?,
            )?;
            gen_thm2_string(&params)
        }
        FamilyId::PowersA => gen_powers_a(req(id, "k", p.k)?),
        FamilyId::PowersB => gen_powers_b(req(id, "k", p.k)?, p.truncated),
        FamilyId::PowersC => gen_powers_c(req(id, "k", p.k)?, p.truncated),
        FamilyId::AbPower => gen_ab_power(req(id, "k", p.k)?),
        FamilyId::Recursive => gen_recursive(req(id, "k", p.k)?),
        FamilyId::ThueMorse => Ok(gen_thue_morse(req(id, "n", p.n)?)),
        FamilyId::Random => gen_random(
            req(id, "n", p.n)?,
            req(id, "sigma", p.sigma)?,
            p.seed.unwrap_or(0),
        ),
    }
}
