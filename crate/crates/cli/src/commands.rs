use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use tiltlab::qbgraph::{all_edges, graph_dot, ell, min_degree_checked, tilted_interval};
use tiltlab::quantumschub::{check_descent_cycling, gw_min_degree};
use tiltlab::rpolyhecke::{deodhar_sum, eval_at, rtilt_deodhar, rtilt_hecke, rtilt_recursive};
use tiltlab::tiltorder::{a_length, a_leq, a_lesssim, a_sim, explore_leq_a, k_tilted_leq, witness_a, witness_a_leq};
use tiltlab::tiltwords::{
    distinguished_subwords, positive_distinguished_subword, regular_tilted_reduced_word, tilted_reduced_word, word_length,
};
use tiltlab::varietylab::{
    count_points_fq, in_tilted_richardson, in_tilted_richardson_checked, in_tilted_richardson_plucker, is_tnn,
    sample_deodhar, sample_tnn, tnn_signs, ExactMatrix,
};
use tiltlab::{Error, Perm, QPoly, SeqA, TiltedWord};

use crate::{verify, Cli, Cmd, Failure, Format, Method, WordKind};

type Out = Result<String, Failure>;

fn perm(s: &str) -> Result<Perm, Failure> {
    Ok(s.parse::<Perm>()?)
}

fn pair(u: &str, v: &str) -> Result<(Perm, Perm), Failure> {
    let (u, v) = (perm(u)?, perm(v)?);
    if u.n() != v.n() {
        return Err(Failure::Usage(format!("{u} and {v} have different sizes")));
    }
    Ok((u, v))
}

fn seq(s: &str, n: usize) -> Result<SeqA, Failure> {
    let a: SeqA = s.parse()?;
    if a.n() != n {
        return Err(Failure::Usage(format!("a={a} has length {}, expected {n}", a.n())));
    }
    Ok(a)
}

fn pretty(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("serializable") + "\n"
}

fn no_dot(cli: &Cli, verb: &str) -> Result<(), Failure> {
    if cli.format == Format::Dot {
        return Err(Failure::Usage(format!("DOT output is only available for graph and interval, not {verb}")));
    }
    Ok(())
}

fn word_for(a: &SeqA, v: &Perm, kind: WordKind) -> Result<TiltedWord, Error> {
    match kind {
        WordKind::Regular => regular_tilted_reduced_word(a, v),
        WordKind::Any => tilted_reduced_word(a, v),
    }
}

fn explicit_word(a: Option<&String>, word: Option<&String>, u: &Perm, v: &Perm, kind: WordKind) -> Result<TiltedWord, Failure> {
    let n = u.n();
    match (a, word) {
        (Some(a), Some(text)) => {
            let w = TiltedWord::parse(seq(a, n)?, text)?;
            if w.target() != v {
                return Err(Failure::Usage(format!("word {w} multiplies to {}, not {v}", w.target())));
            }
            Ok(w)
        }
        (None, Some(_)) => Err(Failure::Usage("--word needs --a".into())),
        (Some(a), None) => Ok(word_for(&seq(a, n)?, v, kind)?),
        (None, None) => Ok(word_for(&witness_a(u, v)?, v, kind)?),
    }
}

/// Integers as JSON numbers when they fit, strings otherwise.
fn int_json(c: &num_bigint::BigInt) -> Value {
    let s = c.to_string();
    s.parse::<i64>().map(Value::from).unwrap_or(Value::String(s))
}

fn matrix_json<F: tiltlab::varietylab::Scalar>(m: &ExactMatrix<F>) -> Value {
    json!(m.to_strings())
}

pub fn run(cli: &Cli) -> Out {
    match &cli.cmd {
        Cmd::Graph { n } => graph(cli, *n),
        Cmd::Mindeg { u, v } => {
            no_dot(cli, "mindeg")?;
            let (u, v) = pair(u, v)?;
            let d = min_degree_checked(&u, &v)?;
            // Compact JSON in both formats; it is the documented record shape.
            Ok(json!({"ell": ell(&u, &v)?, "d": d.0}).to_string())
        }
        Cmd::Interval { u, v } => interval(cli, u, v),
        Cmd::Order { u, v, a, k, explore, n } => order(cli, u.as_deref(), v.as_deref(), a.as_deref(), *k, *explore, *n),
        Cmd::Word { w, a, kind } => {
            no_dot(cli, "word")?;
            let w = perm(w)?;
            let a = seq(a, w.n())?;
            let word = word_for(&a, &w, *kind)?;
            let len = word_length(&a, &w)?;
            if cli.format == Format::Json {
                Ok(pretty(json!({"a": a.to_string(), "w": w.to_string(), "word": word.to_string(),
                    "length": len, "regular": word.is_regular()})))
            } else {
                Ok(format!("{word}\nlength {len}, regular {}\n", word.is_regular()))
            }
        }
        Cmd::Subwords { u, v, a, word, word_kind } => subwords(cli, u, v, a.as_ref(), word.as_ref(), *word_kind),
        Cmd::Rpoly { u, v, method, word_kind } => rpoly(cli, u, v, *method, *word_kind),
        Cmd::Member { matrix, u, v, open } => member(cli, matrix, u, v, *open),
        Cmd::Count { u, v, p } => {
            no_dot(cli, "count")?;
            let (u, v) = pair(u, v)?;
            let c = count_points_fq(&u, &v, *p)?;
            let r = rtilt_deodhar(&u, &v)?;
            let at_p = eval_at(&r, *p as i64);
            if at_p != c.into() {
                return Err(Error::Inconsistency(format!("#T°({u},{v})(F_{p}) = {c} but R^tilt({p}) = {at_p}")).into());
            }
            if cli.format == Format::Json {
                Ok(json!({"u": u.to_string(), "v": v.to_string(), "p": p, "count": c, "rtilt": r.to_string()}).to_string())
            } else {
                Ok(format!("{c}\n"))
            }
        }
        Cmd::SampleDeodhar { u, v, seed } => {
            no_dot(cli, "sample-deodhar")?;
            let (u, v) = pair(u, v)?;
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let (sub, m) = sample_deodhar(&u, &v, &mut rng)?;
            let member = in_tilted_richardson_checked(&m, &u, &v, true)?;
            if !member {
                return Err(Error::Inconsistency(format!("Deodhar point for ({u},{v}) is not in the open variety")).into());
            }
            if cli.format == Format::Json {
                Ok(pretty(json!({"seed": seed, "word": sub.parent.to_string(), "subword": sub.to_string(),
                    "jcirc": sub.jcirc, "jminus": sub.jminus, "matrix": matrix_json(&m), "member": member})))
            } else {
                Ok(format!("seed {seed}\nword {}\nsubword {}\n{m}\n", sub.parent, sub))
            }
        }
        Cmd::Tnn { u, v, a, word, seed } => tnn(cli, u, v, a.as_ref(), word.as_ref(), *seed),
        Cmd::Gw { u, v } => {
            no_dot(cli, "gw")?;
            let (u, v) = pair(u, v)?;
            let d = min_degree_checked(&u, &v)?;
            let gw = gw_min_degree(&u, &v)?;
            let coeffs: serde_json::Map<String, Value> =
                gw.coeffs.iter().map(|(w, c)| (w.to_string(), int_json(c))).collect();
            if cli.format == Format::Json {
                Ok(pretty(json!({"u": u.to_string(), "v": v.to_string(), "d": d.0, "coefficients": coeffs})))
            } else {
                Ok(format!("d = {d}\n{}\n", Value::Object(coeffs)))
            }
        }
        Cmd::DescentCycle { u, v, i } => {
            no_dot(cli, "descent-cycle")?;
            let (u, v) = pair(u, v)?;
            let r = check_descent_cycling(&u, &v, *i)?;
            let out = if cli.format == Format::Json {
                pretty(json!({"u": u.to_string(), "v": v.to_string(), "i": i, "d": r.d.0, "checked": r.checked,
                    "graded": r.graded, "passed": r.passed(), "violations": r.violations}))
            } else {
                format!("{r}\n")
            };
            if r.passed() {
                Ok(out)
            } else {
                Err(Failure::Report(out))
            }
        }
        Cmd::Verify { level, n, seed } => {
            no_dot(cli, "verify")?;
            let report = verify::run(*level, *n, *seed);
            let out = if cli.format == Format::Json { pretty(report.to_json()) } else { report.to_text() };
            if report.passed() {
                Ok(out)
            } else {
                Err(Failure::Report(out))
            }
        }
    }
}

fn graph(cli: &Cli, n: usize) -> Out {
    if !(1..=8).contains(&n) {
        return Err(Failure::Usage(format!("n={n} outside 1..=8")));
    }
    let edges = all_edges(n);
    Ok(match cli.format {
        Format::Dot => graph_dot(n),
        Format::Json => pretty(Value::Array(
            edges
                .iter()
                .map(|e| json!({"source": e.source.to_string(), "target": e.target.to_string(), "i": e.i, "j": e.j, "weight": e.weight.0}))
                .collect(),
        )),
        Format::Text => {
            let strong = edges.iter().filter(|e| !e.is_quantum()).count();
            let mut s = format!("Γ_{n}: {} edges ({strong} strong, {} quantum)\n", edges.len(), edges.len() - strong);
            for e in &edges {
                let _ = writeln!(s, "{} -> {}  t({},{})  {}", e.source, e.target, e.i, e.j, e.weight);
            }
            s
        }
    })
}

fn interval(cli: &Cli, u: &str, v: &str) -> Out {
    let (u, v) = pair(u, v)?;
    let iv = tilted_interval(&u, &v)?;
    let d = min_degree_checked(&u, &v)?;
    Ok(match cli.format {
        Format::Dot => iv.to_dot(),
        Format::Json => pretty(json!({"u": u.to_string(), "v": v.to_string(), "ell": iv.ell, "d": d.0,
            "members": iv.members().map(|w| w.to_string()).collect::<Vec<_>>()})),
        Format::Text => {
            let mut s = format!("[{u},{v}]  ℓ={}  d={d}  |[u,v]|={}\n", iv.ell, iv.len());
            for r in 0..=iv.ell {
                let level: Vec<String> = iv.rank.iter().filter(|(_, &k)| k == r).map(|(w, _)| w.to_string()).collect();
                let _ = writeln!(s, "rank {r}: {}", level.join(" "));
            }
            s
        }
    })
}

fn order(cli: &Cli, u: Option<&str>, v: Option<&str>, a: Option<&str>, k: Option<usize>, explore: bool, n: Option<usize>) -> Out {
    no_dot(cli, "order")?;
    if explore {
        let seqs = match (a, n) {
            (Some(a), _) => vec![a.parse::<SeqA>()?],
            (None, Some(n)) => SeqA::all(n),
            (None, None) => return Err(Failure::Usage("order --explore needs --n or --a".into())),
        };
        let mut rows = Vec::new();
        let mut text = String::from("exploratory sweep of (S_n, ≤_a); nothing is asserted\n");
        for a in seqs {
            let r = explore_leq_a(&a)?;
            let _ = writeln!(
                text,
                "a={} comparable={} covers={} components={} graded={}{}",
                r.a,
                r.comparable_pairs,
                r.covers,
                r.components,
                r.graded,
                r.counterexample.as_ref().map(|c| format!("  [{c}]")).unwrap_or_default()
            );
            rows.push(json!({"a": r.a.to_string(), "comparable_pairs": r.comparable_pairs, "covers": r.covers,
                "components": r.components, "graded": r.graded, "counterexample": r.counterexample}));
        }
        return Ok(if cli.format == Format::Json { pretty(Value::Array(rows)) } else { text });
    }
    let (Some(u), Some(v)) = (u, v) else {
        return Err(Failure::Usage("order needs U and V (or --explore)".into()));
    };
    let (u, v) = pair(u, v)?;
    let mut obj = serde_json::Map::new();
    obj.insert("u".into(), json!(u.to_string()));
    obj.insert("v".into(), json!(v.to_string()));
    match a {
        Some(a) => {
            let a = seq(a, u.n())?;
            obj.insert("a".into(), json!(a.to_string()));
            obj.insert("leq".into(), json!(a_leq(&a, &u, &v)));
            obj.insert("sim".into(), json!(a_sim(&a, &u, &v)));
            obj.insert("lesssim".into(), json!(a_lesssim(&a, &u, &v)));
            obj.insert("a_length_u".into(), json!(a_length(&a, &u)));
            obj.insert("a_length_v".into(), json!(a_length(&a, &v)));
        }
        None => {
            obj.insert("witness_lesssim".into(), json!(witness_a(&u, &v)?.to_string()));
            obj.insert("witness_leq".into(), json!(witness_a_leq(&u, &v)?.to_string()));
            obj.insert("ell".into(), json!(ell(&u, &v)?));
        }
    }
    if let Some(k) = k {
        obj.insert("k".into(), json!(k));
        obj.insert("k_tilted_leq".into(), json!(k_tilted_leq(&u, &v, k)?));
    }
    Ok(if cli.format == Format::Json {
        pretty(Value::Object(obj))
    } else {
        obj.iter().map(|(k, v)| format!("{k}: {}\n", v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string()))).collect()
    })
}

fn subwords(cli: &Cli, u: &str, v: &str, a: Option<&String>, word: Option<&String>, kind: WordKind) -> Out {
    no_dot(cli, "subwords")?;
    let (u, v) = pair(u, v)?;
    let w = explicit_word(a, word, &u, &v, kind)?;
    let subs = distinguished_subwords(&w, &u)?;
    let positive = positive_distinguished_subword(&w, &u).ok();
    if cli.format == Format::Json {
        let items: Vec<Value> = subs
            .iter()
            .map(|s| json!({"subword": s.to_string(), "jplus": s.jplus, "jcirc": s.jcirc, "jminus": s.jminus,
                "regular": s.is_regular(), "positive": Some(s) == positive.as_ref()}))
            .collect();
        return Ok(pretty(json!({"a": w.a().to_string(), "word": w.to_string(), "regular_word": w.is_regular(), "subwords": items})));
    }
    let mut s = format!("a={} word {}{}\n", w.a(), w, if w.is_regular() { "" } else { "  (not regular; exploratory)" });
    let _ = writeln!(s, "{} distinguished subwords", subs.len());
    for sub in &subs {
        let mark = if Some(sub) == positive.as_ref() { "  positive" } else { "" };
        let _ = writeln!(s, "{sub}  |J°|={} |J-|={}{mark}", sub.jcirc.len(), sub.jminus.len());
    }
    Ok(s)
}

fn rpoly(cli: &Cli, u: &str, v: &str, method: Method, kind: WordKind) -> Out {
    no_dot(cli, "rpoly")?;
    let (u, v) = pair(u, v)?;
    let deodhar = || -> Result<QPoly, Error> {
        match kind {
            WordKind::Regular => rtilt_deodhar(&u, &v),
            WordKind::Any => deodhar_sum(&tilted_reduced_word(&witness_a(&u, &v)?, &v)?, &u),
        }
    };
    let results: Vec<(&str, QPoly)> = match method {
        Method::Deodhar => vec![("deodhar", deodhar()?)],
        Method::Recursive => vec![("recursive", rtilt_recursive(&u, &v)?)],
        Method::Hecke => vec![("hecke", rtilt_hecke(&u, &v)?)],
        Method::All => vec![("deodhar", deodhar()?), ("recursive", rtilt_recursive(&u, &v)?), ("hecke", rtilt_hecke(&u, &v)?)],
    };
    let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
    let out = if cli.format == Format::Json {
        let mut obj = serde_json::Map::new();
        obj.insert("u".into(), json!(u.to_string()));
        obj.insert("v".into(), json!(v.to_string()));
        for (name, r) in &results {
            obj.insert((*name).into(), json!(r.to_string()));
        }
        if results.len() > 1 {
            obj.insert("agree".into(), json!(agree));
        }
        if kind == WordKind::Any {
            obj.insert("exploratory".into(), json!(true));
        }
        pretty(Value::Object(obj))
    } else {
        let mut s: String = results.iter().map(|(name, r)| format!("{name}: {r}\n")).collect();
        if results.len() > 1 {
            s.push_str(if agree { "agree\n" } else { "DISAGREE\n" });
        }
        s
    };
    if agree {
        Ok(out)
    } else if kind == WordKind::Any {
        // non-regular words are exploratory: report, do not fail
        Ok(out)
    } else {
        Err(Failure::Report(out))
    }
}

fn member(cli: &Cli, path: &std::path::Path, u: &str, v: &str, open: bool) -> Out {
    no_dot(cli, "member")?;
    let (u, v) = pair(u, v)?;
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let rows: Vec<Vec<String>> = value
        .as_array()
        .ok_or_else(|| Error::Parse("matrix JSON must be an array of rows".into()))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Parse("each row must be an array".into()))?
                .iter()
                .map(|x| match x {
                    Value::String(s) => Ok(s.clone()),
                    Value::Number(n) => Ok(n.to_string()),
                    _ => Err(Error::Parse(format!("bad entry {x}"))),
                })
                .collect()
        })
        .collect::<Result<_, Error>>()?;
    let m = ExactMatrix::parse_rational(&rows)?;
    let by_rank = in_tilted_richardson(&m, &u, &v, open)?;
    let by_plucker = in_tilted_richardson_plucker(&m, &u, &v, open)?;
    if by_rank != by_plucker {
        return Err(Error::Inconsistency(format!("rank route says {by_rank}, Plücker route says {by_plucker}")).into());
    }
    Ok(if cli.format == Format::Json {
        json!({"u": u.to_string(), "v": v.to_string(), "open": open, "member": by_rank, "rank_route": by_rank, "plucker_route": by_plucker}).to_string()
    } else {
        format!("{by_rank}\n")
    })
}

fn tnn(cli: &Cli, u: &str, v: &str, a: Option<&String>, word: Option<&String>, seed: u64) -> Out {
    no_dot(cli, "tnn")?;
    let (u, v) = pair(u, v)?;
    let w = explicit_word(a, word, &u, &v, WordKind::Regular)?;
    let sub = positive_distinguished_subword(&w, &u)?;
    let signs = tnn_signs(&sub)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = sample_tnn(&w, &sub, &mut rng)?;
    let ok = is_tnn(&m, w.a());
    if !ok {
        return Err(Error::Inconsistency(format!("sample for ({u},{v}) with the computed signs is not totally nonnegative\n{m}")).into());
    }
    let show = |v: &[i8]| v.iter().map(|&x| if x > 0 { '+' } else { '-' }).collect::<String>();
    if cli.format == Format::Json {
        return Ok(pretty(json!({"a": w.a().to_string(), "word": w.to_string(), "subword": sub.to_string(), "jcirc": sub.jcirc,
            "signs": show(&signs.signs), "trace": signs.trace.iter().map(|t| show(t)).collect::<Vec<_>>(),
            "seed": seed, "matrix": matrix_json(&m), "tnn": ok})));
    }
    let mut s = format!("a={} word {}\npositive subword {}\nsigns on J° {:?}: {}\ntrace:\n", w.a(), w, sub, sub.jcirc, show(&signs.signs));
    for (j, t) in signs.trace.iter().enumerate() {
        let _ = writeln!(s, "  sign^({j}) = {}", show(t));
    }
    let _ = writeln!(s, "sample (seed {seed}), totally nonnegative:\n{m}");
    Ok(s)
}
