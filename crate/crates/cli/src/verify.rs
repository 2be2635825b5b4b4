//! The `verify` property catalogue.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};
use tiltlab::qbgraph::{edge_weight_checked, ell, min_degree, min_degree_checked, tilted_interval};
use tiltlab::quantumschub::{check_descent_cycling, path_schubert};
use tiltlab::rpolyhecke::{eval_at, rtilt_checked};
use tiltlab::tiltorder::{a_lesssim_checked, covers, in_tilted_interval_checked, interval_s_invariant, witness_a, OrderMode, Relation};
use tiltlab::tiltwords::{regular_tilted_reduced_word, tilted_reduced_word, word_length};
use tiltlab::varietylab::{count_points_fq, in_tilted_richardson_checked, rat, sample_deodhar, ExactMatrix};
use tiltlab::error::check_gate;
use tiltlab::{Error, Perm, QPoly, Result, SeqA, TiltedWord};

use crate::Level;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: Status,
    pub cases: usize,
    pub detail: Option<String>,
}

pub struct Report {
    pub level: Level,
    pub n: usize,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "level": format!("{:?}", self.level).to_lowercase(),
            "n": self.n,
            "seed": self.seed,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name,
                "status": format!("{:?}", c.status).to_lowercase(),
                "cases": c.cases,
                "counterexample": c.detail,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("verify level={:?} n={} seed={}\n", self.level, self.n, self.seed).to_lowercase();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            s.push_str(&format!("{tag} {} ({} cases)", c.name, c.cases));
            if let Some(d) = &c.detail {
                s.push_str(&format!(": {d}"));
            }
            s.push('\n');
        }
        s.push_str(if self.passed() { "all checks passed\n" } else { "some checks FAILED\n" });
        s
    }
}

/// Runs `f` on every case in parallel; the first failing case (in input
/// order) becomes the counterexample, so reports do not depend on scheduling.
/// Runs `f` on every case in parallel; the first failing case (in input
/// order) becomes the counterexample, so reports do not depend on scheduling.
/// A kernel hitting its own size gate turns the check into a skip.
fn run_cases<T: Sync>(name: &'static str, cases: &[T], f: impl Fn(&T) -> Result<Option<String>> + Sync) -> CheckResult {
    let outcomes: Vec<Result<Option<String>>> = cases.par_iter().map(&f).collect();
    let mut gated = None;
    for o in outcomes {
        match o {
            Ok(None) => {}
            Ok(Some(msg)) => return CheckResult { name, status: Status::Fail, cases: cases.len(), detail: Some(msg) },
            Err(e @ Error::Gate { .. }) => gated = gated.or(Some(e.to_string())),
            Err(e) => return CheckResult { name, status: Status::Fail, cases: cases.len(), detail: Some(e.to_string()) },
        }
    }
    match gated {
        Some(msg) => skip(name, msg),
        None => CheckResult { name, status: Status::Pass, cases: cases.len(), detail: None },
    }
}

fn skip(name: &'static str, why: String) -> CheckResult {
    CheckResult { name, status: Status::Skip, cases: 0, detail: Some(why) }
}

struct Ctx {
    level: Level,
    n: usize,
    rng: ChaCha8Rng,
}

impl Ctx {
    /// All items at level full, at most `cap` sampled ones at level fast.
    fn sample<T: Clone>(&mut self, all: Vec<T>, cap: usize) -> Vec<T> {
        if self.level == Level::Full || all.len() <= cap {
            all
        } else {
            all.choose_multiple(&mut self.rng, cap).cloned().collect()
        }
    }

    fn pairs(&mut self, cap: usize) -> Vec<(Perm, Perm)> {
        let all = Perm::all(self.n);
        let pairs = all.iter().flat_map(|u| all.iter().map(move |v| (u.clone(), v.clone()))).collect();
        self.sample(pairs, cap)
    }

    fn gate(&self, name: &'static str, max: usize) -> Option<CheckResult> {
        check_gate(name, "VERIFY", self.n, max).err().map(|e| skip(name, e.to_string()))
    }
}

fn ok_if(cond: bool, msg: impl FnOnce() -> String) -> Result<Option<String>> {
    Ok(if cond { None } else { Some(msg()) })
}

pub fn run(level: Level, n: usize, seed: u64) -> Report {
    let mut ctx = Ctx { level, n, rng: ChaCha8Rng::seed_from_u64(seed) };
    let mut checks = Vec::new();
    if !(2..=8).contains(&n) {
        checks.push(skip("all", format!("n={n} outside 2..=8")));
        return Report { level, n, seed, checks };
    }

    let all = Perm::all(n);
    let name = "qbg-edge-criterion";
    checks.push(ctx.gate(name, 7).unwrap_or_else(|| {
        run_cases(name, &all, |w| {
            for i in 1..=n {
                for j in i + 1..=n {
                    edge_weight_checked(w, i, j)?;
                }
            }
            Ok(None)
        })
    }));

    let name = "min-degree-depth-vs-bfs";
    checks.push(ctx.gate(name, 6).unwrap_or_else(|| {
        let pairs = ctx.pairs(300);
        run_cases(name, &pairs, |(u, v)| min_degree_checked(u, v).map(|_| None))
    }));

    let name = "interval-criterion-vs-bfs";
    checks.push(ctx.gate(name, 5).unwrap_or_else(|| {
        let pairs = ctx.pairs(60);
        run_cases(name, &pairs, |(u, v)| {
            for w in Perm::all(n) {
                in_tilted_interval_checked(u, v, &w)?;
            }
            Ok(None)
        })
    }));

    let name = "rank-two-intervals-are-diamonds";
    checks.push(ctx.gate(name, 6).unwrap_or_else(|| {
        let pairs = ctx.pairs(400);
        run_cases(name, &pairs, |(u, v)| {
            if ell(u, v)? != 2 {
                return Ok(None);
            }
            ok_if(tilted_interval(u, v)?.is_diamond(), || format!("[{u},{v}] is not a diamond"))
        })
    }));

    let name = "witness-sequence";
    checks.push(ctx.gate(name, 6).unwrap_or_else(|| {
        let pairs = ctx.pairs(300);
        run_cases(name, &pairs, |(u, v)| {
            let a = witness_a(u, v)?;
            ok_if(a_lesssim_checked(&a, u, v)?, || format!("witness {a} fails for ({u},{v})"))
        })
    }));

    let name = "tilted-words";
    checks.push(ctx.gate(name, 6).unwrap_or_else(|| {
        let seqs = ctx.sample(SeqA::all(n), 8);
        let cases: Vec<(SeqA, Perm)> = seqs.iter().flat_map(|a| all.iter().map(move |w| (a.clone(), w.clone()))).collect();
        let cases = ctx.sample(cases, 200);
        run_cases(name, &cases, |(a, w)| {
            let plain = tilted_reduced_word(a, w)?;
            let regular = regular_tilted_reduced_word(a, w)?;
            let len = word_length(a, w)?;
            let fine = |x: &TiltedWord| x.is_valid() && x.target() == w && x.len() == len;
            ok_if(fine(&plain) && fine(&regular) && regular.is_regular(), || {
                format!("a={a} w={w}: words {plain} / {regular}, length {len}")
            })
        })
    }));

    let name = "word-length-rank-function";
    checks.push(ctx.gate(name, 6).unwrap_or_else(|| {
        let seqs = ctx.sample(SeqA::all(n), 6);
        let cases: Vec<(SeqA, Perm)> = seqs.iter().flat_map(|a| all.iter().map(move |w| (a.clone(), w.clone()))).collect();
        let cases = ctx.sample(cases, 200);
        run_cases(name, &cases, |(a, w)| {
            for i in 1..=n {
                for j in i + 1..=n {
                    if covers(a, w, i, j, OrderMode::Lesssim) == Relation::Cover {
                        let (l1, l2) = (word_length(a, w)?, word_length(a, &w.swap_positions(i, j))?);
                        if l2 != l1 + 1 {
                            return Ok(Some(format!("a={a} w={w} t({i},{j}): {l1} -> {l2}")));
                        }
                    }
                }
            }
            Ok(None)
        })
    }));

    let name = "r-polynomial-three-routes";
    checks.push(ctx.gate(name, 4).unwrap_or_else(|| {
        let pairs = ctx.pairs(80);
        run_cases(name, &pairs, |(u, v)| {
            let r: QPoly = rtilt_checked(u, v)?;
            let l = ell(u, v)? as u32;
            ok_if(r.degree() == Some(l) && r.leading_coeff() == BigInt::from(1), || format!("R({u},{v}) = {r}, ℓ = {l}"))
        })
    }));

    let name = "fq-point-counts";
    checks.push(ctx.gate(name, 4).unwrap_or_else(|| {
        let pairs = ctx.pairs(if n <= 3 { 36 } else { 12 });
        run_cases(name, &pairs, |(u, v)| {
            let r = rtilt_checked(u, v)?;
            let c = count_points_fq(u, v, 2)?;
            ok_if(eval_at(&r, 2) == BigInt::from(c), || format!("#T°({u},{v})(F_2) = {c}, R(2) = {}", eval_at(&r, 2)))
        })
    }));

    let name = "deodhar-points-in-open-variety";
    checks.push(ctx.gate(name, 5).unwrap_or_else(|| {
        let pairs = ctx.pairs(40);
        let seeds: Vec<(Perm, Perm, u64)> = pairs.into_iter().enumerate().map(|(t, (u, v))| (u, v, seed ^ t as u64)).collect();
        run_cases(name, &seeds, |(u, v, s)| {
            let mut rng = ChaCha8Rng::seed_from_u64(*s);
            for _ in 0..5 {
                let (sub, m) = sample_deodhar(u, v, &mut rng)?;
                if !in_tilted_richardson_checked(&m, u, v, true)? {
                    return Ok(Some(format!("({u},{v}) subword {sub}: point not in T°")));
                }
            }
            Ok(None)
        })
    }));

    let name = "path-schubert-leading-term";
    checks.push(ctx.gate(name, 4).unwrap_or_else(|| {
        let pairs = ctx.pairs(60);
        run_cases(name, &pairs, |(u, v)| {
            let s = path_schubert(u, v)?;
            let d = min_degree(u, v)?;
            let (m, c) = s.revlex_leading().expect("path Schubert polynomials are nonzero");
            let min_ok = s.q_support().iter().all(|q| d.dominated_by(q));
            ok_if(*c == BigInt::from(1) && m.q == d && min_ok, || format!("({u},{v}): leading {c}·{m}, d = {d}"))
        })
    }));

    let name = "descent-cycling";
    checks.push(ctx.gate(name, 4).unwrap_or_else(|| {
        let mut triples = Vec::new();
        for u in &all {
            for v in &all {
                for i in 1..n {
                    if interval_s_invariant(u, v, i).unwrap_or(false) {
                        triples.push((u.clone(), v.clone(), i));
                    }
                }
            }
        }
        let triples = ctx.sample(triples, 10);
        run_cases(name, &triples, |(u, v, i)| {
            let r = check_descent_cycling(u, v, *i)?;
            ok_if(r.passed(), || r.to_string())
        })
    }));

    let name = "printer-round-trips";
    checks.push(ctx.gate(name, 6).unwrap_or_else(|| {
        let pairs = ctx.pairs(50);
        run_cases(name, &pairs, |(u, v)| {
            let a = witness_a(u, v)?;
            let w = regular_tilted_reduced_word(&a, v)?;
            let back = TiltedWord::parse(a.clone(), &w.to_string())?;
            let r = rtilt_checked(u, v).ok();
            let poly_ok = r.is_none_or(|r| r.to_string().parse::<QPoly>().ok() == Some(r));
            let m = ExactMatrix::from_rows(
                (1..=n).map(|i| (1..=n).map(|j| rat((i * j) as i64 - 3, (i + j) as i64)).collect()).collect(),
            )?;
            let m_ok = ExactMatrix::parse_rational(&m.to_strings())? == m;
            let perm_ok = u.to_string().parse::<Perm>()? == *u && a.to_string().parse::<SeqA>()? == a;
            ok_if(back == w && poly_ok && m_ok && perm_ok, || format!("round trip failed for ({u},{v})"))
        })
    }));

    Report { level, n, seed, checks }
}
