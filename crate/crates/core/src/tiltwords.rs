//! Flattening, `a`-tilted reduced words and their distinguished subwords.
//!
//! A word is a sequence of factors, each a simple transposition `s_i` or a
//! bar. Factor positions are 1-indexed and count bars, so the prefix state
//! after `j` factors is `(v^(j), a^(j))` with `a^(j-1) = flatten(a^(j))`
//! exactly when factor `j` is a bar.

use std::fmt;

use crate::error::{domain, Error, Result};
use crate::permcore::{cyclic_interval_contains, shifted_rank, Perm};
use crate::qbgraph;
use crate::tiltorder::{a_descent_state, a_leq, a_lesssim, a_sim, DescentState, SeqA};

/// `Jump_a = {j ∈ [n] : a_j ≠ a_{j+1}}` with `a_{n+1} = 1`.
pub fn jumps(a: &SeqA) -> Vec<usize> {
    (1..=a.n()).filter(|&j| a.at(j) != a.at(j + 1)).collect()
}

/// Replaces `a_1, ..., a_{jump_min}` by `a_{jump_min + 1}`.
pub fn flatten(a: &SeqA) -> Result<SeqA> {
    let Some(&jm) = jumps(a).first() else {
        return domain(format!("{a} has no jumps and cannot be flattened"));
    };
    let c = a.at(jm + 1);
    let mut v = a.as_slice().to_vec();
    v[..jm].fill(c);
    Ok(SeqA::from_vec_unchecked(v))
}

/// The rear analogue of [`flatten`]: with `m` the smallest index such that
/// `a_{m+1} = ... = a_n`, replaces `a_{m+1}, ..., a_n` by `a_m`.
pub fn back_flatten(a: &SeqA) -> Result<SeqA> {
    let n = a.n();
    let s = a.as_slice();
    let mut m = n;
    while m > 1 && s[m - 2] == s[n - 1] {
        m -= 1;
    }
    // now a_m..a_n is the constant tail; the last jump sits at m-1
    let jm = m - 1;
    if jm == 0 {
        return domain(format!("{a} is constant and cannot be back-flattened"));
    }
    let mut v = s.to_vec();
    let c = v[jm - 1];
    v[jm..].fill(c);
    Ok(SeqA::from_vec_unchecked(v))
}

/// The split index `p` making `w` `a`-flattenable, if any: with
/// `q = jump_min` and `c = a_{q+1}`, the values `w_1..w_p` lie in
/// `[a_1, c)_c` and `w_{p+1}..w_q` lie in `[c, a_1)_c`.
pub fn flattenable(a: &SeqA, w: &Perm) -> Option<usize> {
    let &q = jumps(a).first()?;
    let n = w.n();
    let (a1, c) = (a.at(1), a.at(q + 1));
    let first = |x: usize| cyclic_interval_contains(n, a1, c, x, true, false);
    let p = (1..=q).take_while(|&i| first(w.at(i))).count();
    if (p + 1..=q).all(|i| cyclic_interval_contains(n, c, a1, w.at(i), true, false)) {
        Some(p)
    } else {
        None
    }
}

/// One factor of a tilted word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Factor {
    Gen(usize),
    Bar,
}

/// An `a`-tilted word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltedWord {
    a: SeqA,
    factors: Vec<Factor>,
    target: Perm,
}

fn product(n: usize, factors: &[Factor]) -> Perm {
    factors.iter().fold(Perm::identity(n), |w, f| match f {
        Factor::Gen(i) => w.mul_simple(*i),
        Factor::Bar => w,
    })
}

fn valid_factors(a: &SeqA, factors: &[Factor]) -> bool {
    let n = a.n();
    if factors.iter().any(|f| matches!(f, Factor::Gen(i) if *i == 0 || *i >= n)) {
        return false;
    }
    let js = jumps(a);
    let bars: Vec<usize> = (0..factors.len()).filter(|&k| factors[k] == Factor::Bar).collect();
    if bars.len() != js.len() {
        return false;
    }
    let Some(&last) = bars.last() else {
        return true;
    };
    if factors[last + 1..].iter().any(|f| matches!(f, Factor::Gen(i) if js.contains(i))) {
        return false;
    }
    let prefix = &factors[..last];
    if flattenable(a, &product(n, prefix)).is_none() {
        return false;
    }
    valid_factors(&flatten(a).expect("has jumps"), prefix)
}

impl TiltedWord {
    /// Builds a word and checks the recursive validity conditions.
    pub fn new(a: SeqA, factors: Vec<Factor>) -> Result<TiltedWord> {
        if !valid_factors(&a, &factors) {
            let w = TiltedWord { target: product(a.n(), &factors), a, factors };
            return domain(format!("{w} is not a valid {}-tilted word", w.a));
        }
        Ok(TiltedWord { target: product(a.n(), &factors), a, factors })
    }

    /// Builds a word without validating it; see [`TiltedWord::is_valid`].
    pub fn new_unchecked(a: SeqA, factors: Vec<Factor>) -> TiltedWord {
        TiltedWord { target: product(a.n(), &factors), a, factors }
    }

    /// Parses `"s1 s2 | s1"` or the compact form `"s1s2|s1"`.
    pub fn parse(a: SeqA, text: &str) -> Result<TiltedWord> {
        let tokens = tokenize(text)?;
        let factors = tokens
            .into_iter()
            .map(|t| match t {
                Token::Gen(i) => Ok(Factor::Gen(i)),
                Token::Bar => Ok(Factor::Bar),
                Token::One => Err(Error::Parse("placeholder 1 is only allowed in subwords".into())),
            })
            .collect::<Result<_>>()?;
        TiltedWord::new(a, factors)
    }

    pub fn a(&self) -> &SeqA {
        &self.a
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn target(&self) -> &Perm {
        &self.target
    }

    /// Number of factors, bars included.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn is_valid(&self) -> bool {
        valid_factors(&self.a, &self.factors)
    }

    /// `a^(0), ..., a^(ℓ)`.
    pub fn seq_states(&self) -> Vec<SeqA> {
        let l = self.len();
        let mut out = vec![self.a.clone(); l + 1];
        for j in (1..=l).rev() {
            out[j - 1] = if self.factors[j - 1] == Factor::Bar {
                flatten(&out[j]).expect("valid word has a jump at every bar")
            } else {
                out[j].clone()
            };
        }
        out
    }

    /// `v^(0), ..., v^(ℓ)`.
    pub fn perm_states(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.n())];
        for f in &self.factors {
            let next = match f {
                Factor::Gen(i) => out.last().unwrap().mul_simple(*i),
                Factor::Bar => out.last().unwrap().clone(),
            };
            out.push(next);
        }
        out
    }

    /// For each bar at factor position `j`: the pair `(q, p)` with
    /// `q = jump_min(a^(j))` and `p` the flattenable split of `v^(j)`.
    pub fn bar_data(&self) -> Vec<(usize, usize, usize)> {
        let seqs = self.seq_states();
        let perms = self.perm_states();
        (1..=self.len())
            .filter(|&j| self.factors[j - 1] == Factor::Bar)
            .map(|j| {
                let q = jumps(&seqs[j])[0];
                let p = flattenable(&seqs[j], &perms[j]).expect("valid word");
                (j, q, p)
            })
            .collect()
    }

    /// For each bar, the factor positions of the block of `p(q-p)` generators
    /// immediately before it, if that block exists and multiplies to the
    /// bi-Grassmannian permutation `s_{q-p,p}`.
    pub fn regular_blocks(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.n();
        let mut blocks = Vec::new();
        for (j, q, p) in self.bar_data() {
            let len = p * (q - p);
            if len > j - 1 {
                return None;
            }
            let start = j - len;
            let block = &self.factors[start - 1..j - 1];
            if block.contains(&Factor::Bar) || product(n, block) != bigrassmannian(n, q - p, p) {
                return None;
            }
            blocks.push((start..j).collect());
        }
        Some(blocks)
    }

    pub fn is_regular(&self) -> bool {
        self.regular_blocks().is_some()
    }
}

/// `s_{a,b} = (a+1) ... (a+b) 1 ... a (a+b+1) ... n`.
pub fn bigrassmannian(n: usize, a: usize, b: usize) -> Perm {
    let mut w: Vec<usize> = (a + 1..=a + b).collect();
    w.extend(1..=a);
    w.extend(a + b + 1..=n);
    Perm::new(&w).expect("a + b <= n")
}

impl fmt::Display for TiltedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|x| match x {
                Factor::Gen(i) => format!("s{i}"),
                Factor::Bar => "|".to_string(),
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

enum Token {
    Gen(usize),
    Bar,
    One,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        match chars[k] {
            c if c.is_whitespace() || c == '·' || c == '*' => k += 1,
            '|' => {
                out.push(Token::Bar);
                k += 1;
            }
            '1' => {
                out.push(Token::One);
                k += 1;
            }
            's' | 'S' => {
                let start = k + 1;
                let mut end = start;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                let digits: String = chars[start..end].iter().collect();
                let i = digits.parse().map_err(|_| Error::Parse(format!("generator without index in {text:?}")))?;
                out.push(Token::Gen(i));
                k = end;
            }
            c => return Err(Error::Parse(format!("unexpected {c:?} in word {text:?}"))),
        }
    }
    Ok(out)
}

/// A canonical reduced word for `x`: build `x` from the identity by moving
/// the value `x_i` left into position `i`, for `i = 1, ..., n`.
pub fn canonical_reduced_word(x: &Perm) -> Vec<usize> {
    let n = x.n();
    let mut cur = Perm::identity(n);
    let mut word = Vec::with_capacity(x.length());
    for i in 1..=n {
        let mut p = (1..=n).find(|&p| cur.at(p) == x.at(i)).unwrap();
        while p > i {
            word.push(p - 1);
            cur = cur.mul_simple(p - 1);
            p -= 1;
        }
    }
    debug_assert_eq!(&cur, x);
    word
}

/// `w` with its first `k` entries sorted in the order `<_r`.
fn sort_prefix(w: &Perm, k: usize, r: usize) -> Perm {
    let n = w.n();
    let mut v = w.oneline();
    v[..k].sort_by_key(|&x| shifted_rank(n, r, x));
    Perm::new(&v).unwrap()
}

fn chain_to_word(a: &SeqA, chain: &[Perm], bar_after: impl Fn(usize) -> bool) -> TiltedWord {
    let mut factors = Vec::new();
    for (s, pair) in chain.windows(2).enumerate() {
        let step = pair[0].inverse().compose(&pair[1]);
        factors.extend(canonical_reduced_word(&step).into_iter().map(Factor::Gen));
        if bar_after(s) {
            factors.push(Factor::Bar);
        }
    }
    TiltedWord::new_unchecked(a.clone(), factors)
}

/// An `a`-tilted reduced word for `w` by successive prefix sorting.
pub fn tilted_reduced_word(a: &SeqA, w: &Perm) -> Result<TiltedWord> {
    if a.n() != w.n() {
        return domain("size mismatch");
    }
    let js = jumps(a);
    let t = js.len();
    // chain[0] = id = w^(t+1), chain[t - k + 1] = w^(k), chain[t+1] = w
    let mut chain = vec![Perm::identity(w.n())];
    for k in (1..=t).rev() {
        chain.push(sort_prefix(w, js[k - 1], a.at(js[k - 1])));
    }
    chain.push(w.clone());
    let word = chain_to_word(a, &chain, |s| s < t);
    check_word(word, w)
}

/// A regular `a`-tilted reduced word for `w`: before each bar, the block
/// `w̃^(k) -> w^(k)` is a reduced word for a bi-Grassmannian permutation.
pub fn regular_tilted_reduced_word(a: &SeqA, w: &Perm) -> Result<TiltedWord> {
    if a.n() != w.n() {
        return domain("size mismatch");
    }
    let js = jumps(a);
    let t = js.len();
    let mut chain = vec![Perm::identity(w.n())];
    for k in (1..=t).rev() {
        let jk = js[k - 1];
        chain.push(sort_prefix(w, jk, a.at(jk + 1)));
        chain.push(sort_prefix(w, jk, a.at(jk)));
    }
    chain.push(w.clone());
    let word = chain_to_word(a, &chain, |s| s % 2 == 1 && s < 2 * t);
    let word = check_word(word, w)?;
    if !word.is_regular() {
        return Err(Error::Inconsistency(format!("constructed word {word} is not regular")));
    }
    Ok(word)
}

fn check_word(word: TiltedWord, w: &Perm) -> Result<TiltedWord> {
    if word.target() != w || !word.is_valid() {
        return Err(Error::Inconsistency(format!("constructed word {word} is not a valid word for {w}")));
    }
    Ok(word)
}

/// `ℓ^word_a(w)`, the length (bars included) of an `a`-tilted reduced word.
pub fn word_length(a: &SeqA, w: &Perm) -> Result<usize> {
    Ok(tilted_reduced_word(a, w)?.len())
}

/// A subword of a tilted word, with its Deodhar index sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subword {
    pub parent: TiltedWord,
    /// One flag per factor; bars are always kept.
    pub keep: Vec<bool>,
    pub target: Perm,
    /// Factor positions (1-indexed, bars counted).
    pub jplus: Vec<usize>,
    pub jcirc: Vec<usize>,
    pub jminus: Vec<usize>,
}

impl Subword {
    /// Builds a subword from a keep-mask and computes its index sets.
    pub fn from_mask(parent: &TiltedWord, keep: Vec<bool>) -> Result<Subword> {
        if keep.len() != parent.len() {
            return domain("mask length differs from the word length");
        }
        let seqs = parent.seq_states();
        let mut u = Perm::identity(parent.n());
        let (mut jplus, mut jcirc, mut jminus) = (vec![], vec![], vec![]);
        for j in 1..=parent.len() {
            match parent.factors[j - 1] {
                Factor::Bar => {
                    if !keep[j - 1] {
                        return domain("bars cannot be dropped");
                    }
                }
                Factor::Gen(i) => {
                    if keep[j - 1] {
                        let next = u.mul_simple(i);
                        if a_leq(&seqs[j], &u, &next) {
                            jplus.push(j);
                        } else {
                            jminus.push(j);
                        }
                        u = next;
                    } else {
                        jcirc.push(j);
                    }
                }
            }
        }
        Ok(Subword { parent: parent.clone(), keep, target: u, jplus, jcirc, jminus })
    }

    /// Parses a subword written with `1` for dropped factors, e.g. `"s1s2s3|111s2s1|1"`.
    pub fn parse(parent: &TiltedWord, text: &str) -> Result<Subword> {
        let tokens = tokenize(text)?;
        if tokens.len() != parent.len() {
            return Err(Error::Parse(format!("{text:?} has {} factors, expected {}", tokens.len(), parent.len())));
        }
        let mut keep = Vec::with_capacity(tokens.len());
        for (t, f) in tokens.iter().zip(parent.factors()) {
            match (t, f) {
                (Token::Gen(i), Factor::Gen(k)) if i == k => keep.push(true),
                (Token::One, Factor::Gen(_)) => keep.push(false),
                (Token::Bar, Factor::Bar) => keep.push(true),
                _ => return Err(Error::Parse(format!("{text:?} is not a subword of {parent}"))),
            }
        }
        Subword::from_mask(parent, keep)
    }

    /// The kept factors as a tilted word over the same `a`.
    pub fn as_word(&self) -> TiltedWord {
        let factors = self.parent.factors.iter().zip(&self.keep).filter(|(_, &k)| k).map(|(f, _)| *f).collect();
        TiltedWord::new_unchecked(self.parent.a.clone(), factors)
    }

    /// Both subword conditions: the kept word is valid and `u ∼_a v`.
    pub fn is_subword(&self) -> bool {
        self.as_word().is_valid() && a_sim(&self.parent.a, &self.target, &self.parent.target)
    }

    /// `u^(j) ≤_{a^(j)} u^(j-1) s_{i_j}` at every generator position.
    pub fn is_distinguished(&self) -> bool {
        let seqs = self.parent.seq_states();
        let mut u = Perm::identity(self.parent.n());
        for j in 1..=self.parent.len() {
            if let Factor::Gen(i) = self.parent.factors[j - 1] {
                let moved = u.mul_simple(i);
                let next = if self.keep[j - 1] { moved.clone() } else { u.clone() };
                if !a_leq(&seqs[j], &next, &moved) {
                    return false;
                }
                u = next;
            }
        }
        true
    }

    /// Every regular block of the parent word is kept in full.
    pub fn is_regular(&self) -> bool {
        match self.parent.regular_blocks() {
            Some(blocks) => blocks.iter().flatten().all(|&j| self.keep[j - 1]),
            None => false,
        }
    }

    /// Bar positions of the parent word.
    pub fn bars(&self) -> Vec<usize> {
        (1..=self.parent.len()).filter(|&j| self.parent.factors[j - 1] == Factor::Bar).collect()
    }
}

impl fmt::Display for Subword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parent
            .factors
            .iter()
            .zip(&self.keep)
            .map(|(x, &k)| match (x, k) {
                (Factor::Gen(i), true) => format!("s{i}"),
                (Factor::Gen(_), false) => "1".to_string(),
                (Factor::Bar, _) => "|".to_string(),
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// All distinguished subwords of `word_v` with product `u`.
pub fn distinguished_subwords(word_v: &TiltedWord, u: &Perm) -> Result<Vec<Subword>> {
    distinguished_subwords_with(word_v, u, true)
}

/// As [`distinguished_subwords`]; `prune` toggles the early cut that
/// abandons a branch once some `u^(j)[k]` can no longer change but differs
/// from `u[k]`.
pub fn distinguished_subwords_with(word_v: &TiltedWord, u: &Perm, prune: bool) -> Result<Vec<Subword>> {
    let n = word_v.n();
    if u.n() != n {
        return domain("size mismatch");
    }
    if !a_sim(word_v.a(), u, word_v.target()) {
        return domain(format!("{u} is not ∼_a-equivalent to {}", word_v.target()));
    }
    let seqs = word_v.seq_states();
    let l = word_v.len();
    // last[k] = last factor position holding s_k (0 if none)
    let mut last = vec![0usize; n];
    for j in 1..=l {
        if let Factor::Gen(i) = word_v.factors[j - 1] {
            last[i] = j;
        }
    }
    let targets: Vec<Vec<usize>> = (0..n).map(|k| u.prefix_set(k).elems().to_vec()).collect();
    let settled = |w: &Perm, j: usize| {
        (1..n).filter(|&k| last[k] <= j).all(|k| w.prefix_set(k).elems() == targets[k].as_slice())
    };

    struct Ctx<'a> {
        word: &'a TiltedWord,
        seqs: &'a [SeqA],
        u: &'a Perm,
        prune: bool,
        out: Vec<Vec<bool>>,
    }
    fn dfs(ctx: &mut Ctx, j: usize, cur: Perm, mask: &mut Vec<bool>, settled: &dyn Fn(&Perm, usize) -> bool) {
        if ctx.prune && !settled(&cur, j) {
            return;
        }
        if j == ctx.word.len() {
            if &cur == ctx.u {
                ctx.out.push(mask.clone());
            }
            return;
        }
        let jj = j + 1;
        match ctx.word.factors[j] {
            Factor::Bar => {
                // the kept prefix must be a^(jj)-flattenable
                if flattenable(&ctx.seqs[jj], &cur).is_some() {
                    mask.push(true);
                    dfs(ctx, jj, cur, mask, settled);
                    mask.pop();
                }
            }
            Factor::Gen(i) => {
                let moved = cur.mul_simple(i);
                // dropping is allowed only if s_i does not decrease cur
                let may_drop = a_leq(&ctx.seqs[jj], &cur, &moved);
                mask.push(true);
                dfs(ctx, jj, moved, mask, settled);
                mask.pop();
                if may_drop {
                    mask.push(false);
                    dfs(ctx, jj, cur, mask, settled);
                    mask.pop();
                }
            }
        }
    }
    let mut ctx = Ctx { word: word_v, seqs: &seqs, u, prune, out: Vec::new() };
    let mut mask = Vec::with_capacity(l);
    dfs(&mut ctx, 0, Perm::identity(n), &mut mask, &settled);
    ctx.out.into_iter().map(|m| Subword::from_mask(word_v, m)).collect()
}

/// The unique distinguished subword with `J^- = ∅`, built right to left by
/// keeping `s_i` exactly when `i` is an `a^(j)`-descent of the running product.
pub fn positive_distinguished_subword(word_v: &TiltedWord, u: &Perm) -> Result<Subword> {
    if !a_lesssim(word_v.a(), u, word_v.target()) {
        return domain(format!("{u} is not ≲_a {} for a={}", word_v.target(), word_v.a()));
    }
    let seqs = word_v.seq_states();
    let mut cur = u.clone();
    let mut keep = vec![true; word_v.len()];
    for j in (1..=word_v.len()).rev() {
        match word_v.factors[j - 1] {
            Factor::Bar => {
                if flattenable(&seqs[j], &cur).is_none() {
                    return Err(Error::Inconsistency(format!("{cur} is not {}-flattenable at bar {j}", seqs[j])));
                }
            }
            Factor::Gen(i) => match a_descent_state(&seqs[j], &cur, i) {
                DescentState::Descent => cur = cur.mul_simple(i),
                DescentState::Ascent => keep[j - 1] = false,
                DescentState::NotApplicable => {
                    return Err(Error::Inconsistency(format!("s{i} at position {j} sits on a jump of {}", seqs[j])))
                }
            },
        }
    }
    if !cur.is_identity() {
        return Err(Error::Inconsistency(format!("descent rule ended at {cur} instead of the identity")));
    }
    let sub = Subword::from_mask(word_v, keep)?;
    if !sub.jminus.is_empty() || !sub.is_distinguished() {
        return Err(Error::Inconsistency(format!("{sub} is not a positive distinguished subword")));
    }
    Ok(sub)
}

/// [`positive_distinguished_subword`] with `|J^∘| = ℓ(u,v)` checked by BFS.
pub fn positive_distinguished_subword_checked(word_v: &TiltedWord, u: &Perm) -> Result<Subword> {
    let sub = positive_distinguished_subword(word_v, u)?;
    let l = qbgraph::ell(u, word_v.target())?;
    if sub.jcirc.len() != l {
        return Err(Error::Inconsistency(format!("|J°|={} but ℓ({u},{})={l}", sub.jcirc.len(), word_v.target())));
    }
    Ok(sub)
}
