//! Identity testers for circuits promised to have `syntdeg(C) <= k`.
//!
//! - [`pit_randomized`] substitutes the Shpilka–Volkovich generator `G_k`
//!   and evaluates at seeds drawn uniformly from `T^{2k}`, so each trial
//!   spends `2k * ceil(log2 |T|)` random bits independently of `n`'s
//!   exponent. A nonzero value is a certificate; the ZERO verdict is wrong
//!   with probability at most `(k n / |T|)^t`.
//! - [`pit_exhaustive_weightk`] evaluates on every point of `W^k_n(S)`.
//! - [`pit_exhaustive_grid`] evaluates on all of `S^n`, the ground truth.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::circuit::Circuit;
use crate::error::{Error, Result};
use crate::exec::{self, Execution};
use crate::field::{is_prime, FieldElement, PrimeField};
use crate::svgen::{SeedPoint, SvGenerator, WeightKSet};
use crate::DEFAULT_ENUMERATION_LIMIT;

pub const DEFAULT_TRIALS: u32 = 20;
pub const DEFAULT_INTEGER_ROUNDS: u32 = 3;

/// Bits consumed per candidate when drawing a 62-bit prime.
const PRIME_CANDIDATE_BITS: u64 = 61;
/// `log2` of a lower bound on the number of primes in `[2^61, 2^62)`.
/// Dusart's bounds give more than `2^61 / 43` of them.
const LOG2_PRIME_COUNT_LOWER: u32 = 55;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    #[default]
    Randomized,
    ExhaustiveWeightK,
    ExhaustiveGrid,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Randomized => "randomized",
            Mode::ExhaustiveWeightK => "exhaustive-weightk",
            Mode::ExhaustiveGrid => "exhaustive-grid",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "randomized" => Ok(Mode::Randomized),
            "exhaustive-weightk" => Ok(Mode::ExhaustiveWeightK),
            "exhaustive-grid" => Ok(Mode::ExhaustiveGrid),
            other => Err(Error::Config(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PitConfig {
    pub trials: u32,
    /// `|T|` in randomized mode (default `max(2kn, 2)`), `|S|` in the
    /// exhaustive modes (default `k + 1`, or `syntdeg + 1` for the grid).
    pub set_size: Option<u64>,
    pub seed: u64,
    pub mode: Mode,
    pub field: PrimeField,
    pub execution: Execution,
    pub enumeration_limit: u64,
}

impl Default for PitConfig {
    fn default() -> Self {
        PitConfig {
            trials: DEFAULT_TRIALS,
            set_size: None,
            seed: 0,
            mode: Mode::Randomized,
            field: PrimeField::mersenne61(),
            execution: Execution::Parallel,
            enumeration_limit: DEFAULT_ENUMERATION_LIMIT,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Zero,
    NonZero,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Zero => "ZERO",
            Verdict::NonZero => "NONZERO",
        })
    }
}

/// A point where the circuit does not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Generator seed in randomized mode; `point = G_k(seed)`.
    pub seed: Option<SeedPoint>,
    pub point: Vec<FieldElement>,
    pub value: FieldElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerRounds {
    pub primes: Vec<u64>,
    pub prime_selection_bits: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PitReport {
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    /// Trials in randomized mode, evaluated points in the exhaustive modes.
    pub trials_run: u64,
    pub random_bits_used: u64,
    /// Upper bound on the probability that a ZERO verdict is wrong. Zero
    /// for NONZERO verdicts and for the exhaustive modes.
    pub error_bound: Ratio<BigUint>,
    pub prime: u64,
    pub k: u64,
    pub n: usize,
    pub syntdeg: u64,
    pub mode: Mode,
    pub seed: Option<u64>,
    pub integer: Option<IntegerRounds>,
}

fn values(v: &[FieldElement]) -> Vec<u64> {
    v.iter().map(|x| x.value()).collect()
}

impl PitReport {
    pub fn to_json(&self) -> Value {
        let witness = self.witness.as_ref().map(|w| {
            json!({
                "seed": w.seed.as_ref().map(|s| json!({ "y": values(&s.y), "z": values(&s.z) })),
                "point": values(&w.point),
                "value": w.value.value(),
            })
        });
        let mut out = json!({
            "verdict": self.verdict.to_string(),
            "witness": witness,
            "trials": self.trials_run,
            "random_bits": self.random_bits_used,
            "error_bound_num": self.error_bound.numer().to_string(),
            "error_bound_den": self.error_bound.denom().to_string(),
            "prime": self.prime,
            "k": self.k,
            "n": self.n,
            "syntdeg": self.syntdeg,
            "mode": self.mode.to_string(),
            "seed": self.seed,
        });
        if let Some(int) = &self.integer {
            out["primes"] = json!(int.primes);
            out["prime_selection_bits"] = json!(int.prime_selection_bits);
        }
        out
    }

    /// Re-checks the witness: it must be present exactly for NONZERO, the
    /// circuit must take the recorded nonzero value there, and a randomized
    /// witness must be the generator image of its seed.
    pub fn verify_witness(&self, c: &Circuit) -> Result<bool> {
        let field = PrimeField::new(self.prime)?;
        let w = match (&self.verdict, &self.witness) {
            (Verdict::Zero, None) => return Ok(true),
            (Verdict::NonZero, Some(w)) => w,
            _ => return Ok(false),
        };
        if let Some(seed) = &w.seed {
            let gen = SvGenerator::new(field, c.num_vars(), seed.k())?;
            if gen.generator_image(seed)? != w.point {
                return Ok(false);
            }
        }
        let v = c.evaluate(field, &w.point)?;
        Ok(!v.is_zero() && v == w.value)
    }
}

fn check_promise(c: &Circuit, k: u64) -> Result<()> {
    if c.syntdeg() > k {
        return Err(Error::ParameterViolation {
            syntdeg: c.syntdeg(),
            k,
        });
    }
    Ok(())
}

fn ceil_log2(x: u64) -> u64 {
    debug_assert!(x >= 2);
    (64 - (x - 1).leading_zeros()) as u64
}

/// Default `|T| = max(2kn, 2)`.
pub fn default_sample_set_size(k: u64, n: usize) -> u64 {
    (2 * k).saturating_mul(n as u64).max(2)
}

/// `min(1, (k n / |T|)^t)`.
pub fn randomized_error_bound(k: u64, n: usize, set_size: u64, trials: u32) -> Ratio<BigUint> {
    let per_trial = Ratio::new(BigUint::from(k) * BigUint::from(n), BigUint::from(set_size));
    let one = Ratio::one();
    if per_trial >= one {
        return one;
    }
    (0..trials).fold(one, |acc, _| acc * &per_trial)
}

/// Random-bit cost of `trials` randomized trials.
pub fn randomized_bits(trials: u64, k: u64, set_size: u64) -> u64 {
    trials * 2 * k * ceil_log2(set_size)
}

/// The seed drawn by trial `trial` for master seed `seed`. Each trial
/// reads its own ChaCha stream, so trials are independent of execution
/// order.
pub fn trial_seed(field: PrimeField, k: usize, set_size: u64, seed: u64, trial: u64) -> SeedPoint {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let mut draw = |_| field.element(rng.random_range(0..set_size));
    let y = (0..k).map(&mut draw).collect();
    let z = (0..k).map(&mut draw).collect();
    SeedPoint { y, z }
}

/// Randomized test over `cfg.field` through the generator `G_k`.
pub fn pit_randomized(c: &Circuit, k: u64, cfg: &PitConfig) -> Result<PitReport> {
    check_promise(c, k)?;
    let n = c.num_vars();
    let field = cfg.field;
    let set_size = cfg
        .set_size
        .unwrap_or_else(|| default_sample_set_size(k, n));
    if set_size < 2 {
        return Err(Error::Config(format!(
            "sample set size {set_size} must be at least 2"
        )));
    }
    let required = (n as u64).max(k.saturating_add(1)).max(set_size);
    if field.modulus() <= required {
        return Err(Error::FieldTooSmall {
            modulus: field.modulus(),
            required,
        });
    }
    let ku = k as usize;
    let gen = SvGenerator::new(field, n, ku)?;
    let hit = exec::find_first(cfg.execution, cfg.trials as u64, |trial| {
        let seed = trial_seed(field, ku, set_size, cfg.seed, trial);
        let mut point = vec![field.zero(); n];
        let mut row = vec![field.zero(); n];
        gen.image_into(&seed.y, &seed.z, &mut point, &mut row);
        let mut scratch = Vec::with_capacity(c.size());
        let value = c.evaluate_with(field, &point, &mut scratch);
        (!value.is_zero()).then_some(Witness {
            seed: Some(seed),
            point,
            value,
        })
    });
    let (verdict, witness, trials_run, error_bound) = match hit {
        Some((idx, w)) => (Verdict::NonZero, Some(w), idx + 1, Ratio::zero()),
        None => (
            Verdict::Zero,
            None,
            cfg.trials as u64,
            randomized_error_bound(k, n, set_size, cfg.trials),
        ),
    };
    Ok(PitReport {
        verdict,
        witness,
        trials_run,
        random_bits_used: randomized_bits(trials_run, k, set_size),
        error_bound,
        prime: field.modulus(),
        k,
        n,
        syntdeg: c.syntdeg(),
        mode: Mode::Randomized,
        seed: Some(cfg.seed),
        integer: None,
    })
}

/// SplitMix64 finaliser, used to derive per-round seeds.
fn derive_seed(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// A uniformly random prime in `[2^61, 2^62)` by rejection sampling,
/// with the number of candidates drawn.
fn random_62_bit_prime<R: Rng>(rng: &mut R) -> (u64, u64) {
    let mut draws = 0;
    loop {
        draws += 1;
        let candidate = (1u64 << 61) | rng.random_range(0..1u64 << 61);
        if is_prime(candidate) {
            return (candidate, draws);
        }
    }
}

/// Identity over the integers: repeats [`pit_randomized`] modulo `rounds`
/// independently drawn random 62-bit primes.
///
/// Coefficients of `p_C` have absolute value at most `2^(syntdeg * size)`,
/// so at most `floor(syntdeg * size / 61)` of the (more than `2^55`)
/// 62-bit primes divide any one of them. Each round therefore misses a
/// nonzero integer polynomial with probability at most
/// `δ + floor(syntdeg * size / 61) / 2^55`, and the reported bound is the
/// product over rounds.
pub fn pit_integer(c: &Circuit, k: u64, cfg: &PitConfig, rounds: u32) -> Result<PitReport> {
    check_promise(c, k)?;
    if rounds == 0 {
        return Err(Error::Config(
            "integer mode needs at least one prime".into(),
        ));
    }
    let mut prime_rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    prime_rng.set_stream(u64::MAX);
    let spurious = Ratio::new(
        BigUint::from(c.syntdeg().saturating_mul(c.size() as u64) / 61),
        BigUint::one() << LOG2_PRIME_COUNT_LOWER,
    );
    let mut primes = Vec::new();
    let mut selection_draws = 0u64;
    let mut trials_run = 0u64;
    let mut bits = 0u64;
    let mut bound = Ratio::<BigUint>::one();
    for round in 0..rounds {
        let (prime, draws) = random_62_bit_prime(&mut prime_rng);
        primes.push(prime);
        selection_draws += draws;
        let round_cfg = PitConfig {
            field: PrimeField::new(prime)?,
            seed: derive_seed(cfg.seed, round as u64),
            ..cfg.clone()
        };
        let report = pit_randomized(c, k, &round_cfg)?;
        trials_run += report.trials_run;
        bits += report.random_bits_used;
        let integer = Some(IntegerRounds {
            primes: primes.clone(),
            prime_selection_bits: selection_draws * PRIME_CANDIDATE_BITS,
        });
        if report.verdict == Verdict::NonZero {
            return Ok(PitReport {
                trials_run,
                random_bits_used: bits,
                seed: Some(cfg.seed),
                integer,
                ..report
            });
        }
        let per_round = (report.error_bound + &spurious).min(Ratio::one());
        bound *= per_round;
        if round + 1 == rounds {
            return Ok(PitReport {
                trials_run,
                random_bits_used: bits,
                error_bound: bound,
                seed: Some(cfg.seed),
                integer,
                ..report
            });
        }
    }
    unreachable!("rounds > 0")
}

fn zero_report(c: &Circuit, k: u64, field: PrimeField, mode: Mode) -> PitReport {
    PitReport {
        verdict: Verdict::Zero,
        witness: None,
        trials_run: 0,
        random_bits_used: 0,
        error_bound: Ratio::zero(),
        prime: field.modulus(),
        k,
        n: c.num_vars(),
        syntdeg: c.syntdeg(),
        mode,
        seed: None,
        integer: None,
    }
}

fn field_of(set: &[FieldElement]) -> Result<PrimeField> {
    set.first()
        .map(|x| x.field())
        .ok_or_else(|| Error::Domain("the set S is empty".into()))
}

/// Deterministic test on every point of `W^k_n(S)`; exact for circuits
/// with `syntdeg <= k` when `|S| >= k + 1`.
pub fn pit_exhaustive_weightk(
    c: &Circuit,
    k: u64,
    set: &[FieldElement],
    exec: Execution,
    limit: u64,
) -> Result<PitReport> {
    check_promise(c, k)?;
    if (set.len() as u64) < k.saturating_add(1) {
        return Err(Error::SetTooSmall {
            size: set.len(),
            required: k as usize + 1,
        });
    }
    let field = field_of(set)?;
    let n = c.num_vars();
    let ws = WeightKSet::new(set.to_vec(), k as usize, n)?;
    let total = ws.count();
    if total > limit as u128 {
        return Err(Error::TooLarge(format!(
            "|W^{k}_{n}(S)| = {total} exceeds the limit {limit}"
        )));
    }
    let supports = ws.supports();
    let hit = exec::find_first(exec, supports.len() as u64, |s| {
        let mut scratch = Vec::with_capacity(c.size());
        let mut offset = 0u64;
        ws.scan_support(&supports[s as usize], |p| {
            offset += 1;
            let v = c.evaluate_with(field, p, &mut scratch);
            (!v.is_zero()).then(|| (offset, p.to_vec(), v))
        })
    });
    let mut report = zero_report(c, k, field, Mode::ExhaustiveWeightK);
    report.trials_run = total as u64;
    if let Some((s, (offset, point, value))) = hit {
        let per_weight = (set.len() - 1) as u64;
        let before: u64 = supports[..s as usize]
            .iter()
            .map(|sup| per_weight.pow(sup.len() as u32))
            .sum();
        report.verdict = Verdict::NonZero;
        report.trials_run = before + offset;
        report.witness = Some(Witness {
            seed: None,
            point,
            value,
        });
    }
    Ok(report)
}

/// Ground-truth test on the full grid `S^n`, exact whenever `|S|`
/// exceeds every individual degree; enforced as `|S| >= syntdeg + 1`.
pub fn pit_exhaustive_grid(
    c: &Circuit,
    set: &[FieldElement],
    exec: Execution,
    limit: u64,
) -> Result<PitReport> {
    let required = c.syntdeg().saturating_add(1);
    if (set.len() as u64) < required {
        return Err(Error::SetTooSmall {
            size: set.len(),
            required: required as usize,
        });
    }
    let field = field_of(set)?;
    if let Some(bad) = set.iter().find(|x| x.field() != field) {
        return Err(Error::FieldMismatch {
            left: field.modulus(),
            right: bad.field().modulus(),
        });
    }
    let mut distinct = values(set);
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != set.len() {
        return Err(Error::Domain("the set S has repeated values".into()));
    }
    let n = c.num_vars();
    let m = set.len() as u64;
    let total = (0..n).try_fold(1u64, |acc, _| acc.checked_mul(m));
    let total = match total {
        Some(t) if t <= limit => t,
        _ => {
            return Err(Error::TooLarge(format!(
                "|S|^n = {m}^{n} exceeds the limit {limit}"
            )))
        }
    };
    let hit = exec::find_first(exec, total, |mut idx| {
        let mut point = vec![field.zero(); n];
        for slot in point.iter_mut().rev() {
            *slot = set[(idx % m) as usize];
            idx /= m;
        }
        let mut scratch = Vec::with_capacity(c.size());
        let v = c.evaluate_with(field, &point, &mut scratch);
        (!v.is_zero()).then_some((point, v))
    });
    let mut report = zero_report(c, c.syntdeg(), field, Mode::ExhaustiveGrid);
    report.trials_run = total;
    if let Some((idx, (point, value))) = hit {
        report.verdict = Verdict::NonZero;
        report.trials_run = idx + 1;
        report.witness = Some(Witness {
            seed: None,
            point,
            value,
        });
    }
    Ok(report)
}

/// Run the tester selected by `cfg.mode`. In the exhaustive modes `S` is
/// `{0, 1, ..., |S| - 1}`.
pub fn run(c: &Circuit, k: u64, cfg: &PitConfig) -> Result<PitReport> {
    check_promise(c, k)?;
    let consecutive = |size: u64| -> Result<Vec<FieldElement>> {
        if size > cfg.field.modulus() {
            return Err(Error::FieldTooSmall {
                modulus: cfg.field.modulus(),
                required: size,
            });
        }
        Ok((0..size).map(|v| cfg.field.element(v)).collect())
    };
    match cfg.mode {
        Mode::Randomized => pit_randomized(c, k, cfg),
        Mode::ExhaustiveWeightK => {
            let set = consecutive(cfg.set_size.unwrap_or(k + 1))?;
            pit_exhaustive_weightk(c, k, &set, cfg.execution, cfg.enumeration_limit)
        }
        Mode::ExhaustiveGrid => {
            let set = consecutive(cfg.set_size.unwrap_or(c.syntdeg() + 1))?;
            let mut report = pit_exhaustive_grid(c, &set, cfg.execution, cfg.enumeration_limit)?;
            report.k = k;
            Ok(report)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::{expand_small, parse_circuit, CircuitBuilder};

    fn x_minus_x() -> Circuit {
        let mut b = CircuitBuilder::new(1);
        let x = b.input(1);
        let d = b.sub(x, x);
        b.finish(d)
    }

    fn single_var() -> Circuit {
        parse_circuit("nvars 1\ninput x 1\noutput x\n").unwrap()
    }

    fn e2() -> Circuit {
        let mut b = CircuitBuilder::new(3);
        let (x1, x2, x3) = (b.input(1), b.input(2), b.input(3));
        let a = b.mul(x1, x2);
        let c = b.mul(x1, x3);
        let d = b.mul(x2, x3);
        let s = b.add(a, c);
        let s = b.add(s, d);
        b.finish(s)
    }

    fn f101() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn set(f: PrimeField, v: &[u64]) -> Vec<FieldElement> {
        v.iter().map(|&x| f.element(x)).collect()
    }

    #[test]
    fn zero_circuit_is_zero_for_every_k() {
        // x + (-1)*x has syntactic degree 2: the constant is a leaf.
        assert_eq!(x_minus_x().syntdeg(), 2);
        for k in 2..5 {
            let r = pit_randomized(&x_minus_x(), k, &PitConfig::default()).unwrap();
            assert_eq!(r.verdict, Verdict::Zero);
            assert_eq!(r.trials_run, 20);
            assert_eq!(r.error_bound, randomized_error_bound(k, 1, 2 * k, 20));
            assert!(r.verify_witness(&x_minus_x()).unwrap());
        }
    }

    #[test]
    fn single_variable_is_detected() {
        let c = single_var();
        let cfg = PitConfig {
            set_size: Some(2),
            ..PitConfig::default()
        };
        let r = pit_randomized(&c, 1, &cfg).unwrap();
        assert_eq!(r.verdict, Verdict::NonZero);
        assert!(r.verify_witness(&c).unwrap());
        let oracle = expand_small(&c, cfg.field, 1, 10).unwrap();
        assert!(!oracle.is_zero());
        assert_eq!(r.random_bits_used, r.trials_run * 2);
    }

    #[test]
    fn bit_ledger() {
        // k = 2, n = 3, |T| = 12: 4 coordinates of 4 bits each per trial.
        let mut b = CircuitBuilder::new(3);
        let x = b.input(1);
        let y = b.input(2);
        let z = b.input(3);
        let s = b.add(x, y);
        let s = b.add(s, z);
        let p = b.mul(s, s);
        let zero = b.sub(p, p);
        let c = b.finish(zero);
        assert_eq!(c.syntdeg(), 3);
        let r = pit_randomized(&c, 3, &PitConfig::default()).unwrap();
        assert_eq!(r.random_bits_used, 20 * 6 * ceil_log2(18));

        assert_eq!(
            randomized_bits(20, 2, default_sample_set_size(2, 5)),
            20 * 4 * 5
        );
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(16), 4);
        assert_eq!(ceil_log2(17), 5);
    }

    #[test]
    fn error_bound_arithmetic() {
        let b = randomized_error_bound(2, 3, 12, 3);
        assert_eq!(b, Ratio::new(BigUint::from(1u32), BigUint::from(8u32)));
        assert_eq!(randomized_error_bound(3, 3, 4, 5), Ratio::one());
        assert_eq!(randomized_error_bound(1, 0, 2, 5), Ratio::zero());
    }

    #[test]
    fn parameter_violation() {
        let c = parse_circuit(
            "nvars 3\ninput a 1\ninput b 2\ninput c 3\nmul p a b\nmul q p c\noutput q\n",
        )
        .unwrap();
        let expect = Err(Error::ParameterViolation { syntdeg: 3, k: 2 });
        assert_eq!(pit_randomized(&c, 2, &PitConfig::default()), expect);
        let s = set(f101(), &[0, 1, 2]);
        assert_eq!(
            pit_exhaustive_weightk(&c, 2, &s, Execution::Sequential, 1000),
            expect
        );
    }

    #[test]
    fn field_too_small() {
        let cfg = PitConfig {
            field: PrimeField::new(3).unwrap(),
            ..PitConfig::default()
        };
        assert!(matches!(
            pit_randomized(&e2(), 2, &cfg),
            Err(Error::FieldTooSmall { .. })
        ));
    }

    #[test]
    fn weightk_examples() {
        let f = f101();
        let s = set(f, &[0, 1, 2]);
        let r = pit_exhaustive_weightk(&x_minus_x(), 2, &s, Execution::Sequential, 1000).unwrap();
        assert_eq!(r.verdict, Verdict::Zero);

        let r = pit_exhaustive_weightk(&e2(), 2, &s, Execution::Parallel, 1000).unwrap();
        assert_eq!(r.verdict, Verdict::NonZero);
        let w = r.witness.as_ref().unwrap();
        assert_eq!(values(&w.point), vec![1, 1, 0]);
        assert!(r.verify_witness(&e2()).unwrap());
        // Weight 0 and 1 points all vanish: 1 + 3*2 evaluations, then (1,1,0).
        assert_eq!(r.trials_run, 8);

        assert_eq!(
            pit_exhaustive_weightk(&e2(), 2, &set(f, &[0, 1]), Execution::Sequential, 1000),
            Err(Error::SetTooSmall {
                size: 2,
                required: 3
            })
        );
        assert!(matches!(
            pit_exhaustive_weightk(&e2(), 2, &s, Execution::Sequential, 5),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn grid_examples() {
        let f = f101();
        let r = pit_exhaustive_grid(
            &x_minus_x(),
            &set(f, &[0, 1, 2]),
            Execution::Sequential,
            100,
        )
        .unwrap();
        assert_eq!(r.verdict, Verdict::Zero);
        assert_eq!(r.trials_run, 3);

        let comm = parse_circuit(
            "nvars 2\ninput a 1\ninput b 2\nmul p a b\nmul q b a\nconst m -1\nmul nq m q\nadd d p nq\noutput d\n",
        )
        .unwrap();
        assert_eq!(comm.syntdeg(), 3);
        let r =
            pit_exhaustive_grid(&comm, &set(f, &[0, 1, 2, 3]), Execution::Parallel, 100).unwrap();
        assert_eq!(r.verdict, Verdict::Zero);

        // (x1 + x2)^2 - x1^2 - 2 x1 x2 - x2^2
        let mut b = CircuitBuilder::new(2);
        let (x1, x2) = (b.input(1), b.input(2));
        let s = b.add(x1, x2);
        let sq = b.mul(s, s);
        let a2 = b.mul(x1, x1);
        let b2 = b.mul(x2, x2);
        let ab = b.mul(x1, x2);
        let ab2 = b.add(ab, ab);
        let t = b.add(a2, ab2);
        let t = b.add(t, b2);
        let d = b.sub(sq, t);
        let c = b.finish(d);
        assert!(expand_small(&c, f, c.syntdeg(), 100).unwrap().is_zero());
        let s = set(f, &(0..c.syntdeg() + 1).collect::<Vec<_>>());
        assert_eq!(
            pit_exhaustive_grid(&c, &s, Execution::Sequential, 1000)
                .unwrap()
                .verdict,
            Verdict::Zero
        );

        let r =
            pit_exhaustive_grid(&e2(), &set(f, &[0, 1, 2]), Execution::Sequential, 100).unwrap();
        assert_eq!(r.verdict, Verdict::NonZero);
        // Lexicographic order: (0,0,0) (0,0,1) (0,0,2) (0,1,0) (0,1,1) hits.
        assert_eq!(values(&r.witness.unwrap().point), vec![0, 1, 1]);
        assert_eq!(r.trials_run, 5);
    }

    #[test]
    fn reports_are_independent_of_execution_mode() {
        let c = e2();
        for seed in 0..20 {
            let cfg = PitConfig {
                seed,
                set_size: Some(3),
                trials: 30,
                ..PitConfig::default()
            };
            let par = pit_randomized(&c, 2, &cfg).unwrap();
            let seq = pit_randomized(
                &c,
                2,
                &PitConfig {
                    execution: Execution::Sequential,
                    ..cfg.clone()
                },
            )
            .unwrap();
            assert_eq!(par, seq);
            assert_eq!(par.to_json().to_string(), seq.to_json().to_string());
        }
    }

    #[test]
    fn integer_mode() {
        let cfg = PitConfig::default();
        let r = pit_integer(&x_minus_x(), 2, &cfg, 3).unwrap();
        assert_eq!(r.verdict, Verdict::Zero);
        let int = r.integer.as_ref().unwrap();
        assert_eq!(int.primes.len(), 3);
        assert!(int.primes.iter().all(|&p| p >> 61 == 1 && is_prime(p)));
        assert_eq!(r.trials_run, 60);
        assert!(r.error_bound < Ratio::new(BigUint::one(), BigUint::one() << 50u32));
        assert_eq!(r, pit_integer(&x_minus_x(), 2, &cfg, 3).unwrap());

        let r = pit_integer(&e2(), 2, &cfg, 3).unwrap();
        assert_eq!(r.verdict, Verdict::NonZero);
        assert!(r.verify_witness(&e2()).unwrap());
        assert_eq!(r.integer.unwrap().primes.len(), 1);
    }

    #[test]
    fn json_has_exact_fields() {
        let r = pit_randomized(&x_minus_x(), 2, &PitConfig::default()).unwrap();
        let j = r.to_json();
        for key in [
            "verdict",
            "witness",
            "trials",
            "random_bits",
            "error_bound_num",
            "error_bound_den",
            "prime",
            "k",
            "n",
            "syntdeg",
        ] {
            assert!(j.get(key).is_some(), "{key}");
        }
        assert_eq!(j["verdict"], "ZERO");
        assert_eq!(j["error_bound_num"], "1");
        assert_eq!(j["error_bound_den"], "1048576");
    }

    #[test]
    fn run_dispatches_modes() {
        let c = e2();
        for mode in [
            Mode::Randomized,
            Mode::ExhaustiveWeightK,
            Mode::ExhaustiveGrid,
        ] {
            let cfg = PitConfig {
                mode,
                ..PitConfig::default()
            };
            let r = run(&c, 2, &cfg).unwrap();
            assert_eq!(r.verdict, Verdict::NonZero, "{mode}");
            assert_eq!(r.mode, mode);
            assert!(r.verify_witness(&c).unwrap());
        }
        assert_eq!("exhaustive-grid".parse::<Mode>(), Ok(Mode::ExhaustiveGrid));
        assert!("grid".parse::<Mode>().is_err());
    }
}
