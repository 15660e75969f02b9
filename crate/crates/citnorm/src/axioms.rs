//! Consistency axioms for indicators, and exhaustive counterexample search.
//!
//! An indicator is *consistent* when adding the same publication to two
//! publication sets never changes how the indicator ranks them. That single
//! idea comes in two flavors: a total-performance version that compares
//! sets of any sizes, and an average-performance version that compares sets
//! of equal size. A separate axiom, *homogeneous normalization*, pins down
//! what an indicator must do on sets that share one expected value: report
//! mean citations relative to that expectation.
//!
//! This module checks concrete instances of those properties mechanically
//! ([`ranking_preserved_total`], [`ranking_preserved_average`],
//! [`check_homogeneous`]), verifies the averaging recurrence that powers
//! the uniqueness argument for the average of ratios
//! ([`mncs_recurrence_holds`]), and exhaustively searches a bounded grid of
//! publications for counterexamples ([`search_counterexample`]). The search
//! is a decision procedure, not a sampler: within its bounds, a `None`
//! answer means no violating triple exists, full stop.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num::integer::gcd;

use crate::error::{Error, Result};
use crate::indicators::{mncs, IndicatorKind};
use crate::publication::{Publication, PublicationSet};
use crate::rational::Rational;

/// A named rule mapping publication sets to values, the thing the axiom
/// checks exercise. Wraps either one of the four built-in indicators or an
/// arbitrary user-supplied function under test.
///
/// Custom rules are evaluated as black boxes: the checks only ever observe
/// input/output pairs, so anything total on non-empty sets can be probed.
#[derive(Clone)]
pub struct IndicatorFn {
    name: String,
    rule: Rule,
}

#[derive(Clone)]
enum Rule {
    Builtin(IndicatorKind),
    Custom(Arc<dyn Fn(&PublicationSet) -> Rational + Send + Sync>),
}

impl IndicatorFn {
    #[must_use]
    pub fn builtin(kind: IndicatorKind) -> Self {
        Self {
            name: kind.token().to_owned(),
            rule: Rule::Builtin(kind),
        }
    }

    pub fn custom(
        name: impl Into<String>,
        rule: impl Fn(&PublicationSet) -> Rational + Send + Sync + 'static,
    ) -> Self {
        Self {
            name: name.into(),
            rule: Rule::Custom(Arc::new(rule)),
        }
    }

    #[must_use]
    pub fn name(&self) -> &str {
        &self.name
    }

    #[must_use]
    pub fn evaluate(&self, set: &PublicationSet) -> Rational {
        match &self.rule {
            Rule::Builtin(kind) => kind.evaluate(set),
            Rule::Custom(rule) => rule(set),
        }
    }

    fn builtin_kind(&self) -> Option<IndicatorKind> {
        match self.rule {
            Rule::Builtin(kind) => Some(kind),
            Rule::Custom(_) => None,
        }
    }
}

impl fmt::Debug for IndicatorFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IndicatorFn").field("name", &self.name).finish()
    }
}

/// Which consistency definition to check: comparing sets of any sizes
/// (total performance) or sets of equal size (average performance).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConsistencyKind {
    Total,
    Average,
}

impl fmt::Display for ConsistencyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Total => f.write_str("total"),
            Self::Average => f.write_str("average"),
        }
    }
}

/// A concrete consistency violation: two sets whose ranking under some
/// indicator reverses (or collapses, or splits) when the same publication
/// is added to both. Replaying the triple through the matching
/// `ranking_preserved` check always yields `false`.
#[derive(Clone, Debug)]
pub struct Witness {
    s1: PublicationSet,
    s2: PublicationSet,
    added: Publication,
    before: (Rational, Rational),
    after: (Rational, Rational),
}

impl Witness {
    pub(crate) fn new(
        s1: PublicationSet,
        s2: PublicationSet,
        added: Publication,
        before: (Rational, Rational),
        after: (Rational, Rational),
    ) -> Self {
        Self {
            s1,
            s2,
            added,
            before,
            after,
        }
    }

    #[must_use]
    pub fn s1(&self) -> &PublicationSet {
        &self.s1
    }

    #[must_use]
    pub fn s2(&self) -> &PublicationSet {
        &self.s2
    }

    #[must_use]
    pub fn added(&self) -> &Publication {
        &self.added
    }

    /// Indicator values `(f(S1), f(S2))` before the addition.
    #[must_use]
    pub fn before(&self) -> (&Rational, &Rational) {
        (&self.before.0, &self.before.1)
    }

    /// Indicator values after adding the publication to both sets.
    #[must_use]
    pub fn after(&self) -> (&Rational, &Rational) {
        (&self.after.0, &self.after.1)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "S1 = {}", self.s1)?;
        writeln!(f, "S2 = {}", self.s2)?;
        writeln!(f, "p  = {}", self.added)?;
        writeln!(f, "f(S1) = {}, f(S2) = {}", self.before.0, self.before.1)?;
        write!(
            f,
            "f(S1 + p) = {}, f(S2 + p) = {}",
            self.after.0, self.after.1
        )
    }
}

/// Checks the any-size consistency property on one instance: the indicator
/// orders `S1` and `S2` the same way before and after the same publication
/// `p` is added to both. Order means full three-way comparison, so a tie
/// turning into a strict ranking (or vice versa) also counts as a failure.
#[must_use]
pub fn ranking_preserved_total(
    f: &IndicatorFn,
    s1: &PublicationSet,
    s2: &PublicationSet,
    p: &Publication,
) -> bool {
    let before = f.evaluate(s1).cmp(&f.evaluate(s2));
    let after = f
        .evaluate(&s1.with(p.clone()))
        .cmp(&f.evaluate(&s2.with(p.clone())));
    before == after
}

/// The equal-size variant of [`ranking_preserved_total`]. Average-style
/// indicators are only expected to rank sets of the same size, so this
/// check refuses mismatched sizes rather than reporting a meaningless
/// verdict.
pub fn ranking_preserved_average(
    f: &IndicatorFn,
    s1: &PublicationSet,
    s2: &PublicationSet,
    p: &Publication,
) -> Result<bool> {
    if s1.len() != s2.len() {
        return Err(Error::SizeMismatch {
            left: s1.len(),
            right: s2.len(),
        });
    }
    Ok(ranking_preserved_total(f, s1, s2, p))
}

/// Checks homogeneous normalization on one set: every element must share a
/// single expected value `e`, and the indicator must equal mean citations
/// divided by `e` (with `0/0 = 1` when `e` is zero). Fails with
/// `NotHomogeneous` if the set mixes expected values.
pub fn check_homogeneous(f: &IndicatorFn, set: &PublicationSet) -> Result<bool> {
    let mut iter = set.iter();
    let e = iter.next().expect("sets are non-empty").expected();
    if iter.any(|p| p.expected() != e) {
        return Err(Error::NotHomogeneous);
    }
    let mean_cites = &set
        .iter()
        .map(|p| Rational::from_integer(p.cites()))
        .sum::<Rational>()
        / &Rational::from_integer(set.len() as u64);
    let target = match mean_cites.checked_div(e) {
        Some(value) => value,
        // e = 0 forces every count to 0; the set scores exactly average.
        None => Rational::one(),
    };
    Ok(f.evaluate(set) == target)
}

/// Verifies the averaging recurrence for the average of ratios on one
/// instance: the value on `S ∪ {p}` equals the size-weighted average of
/// the value on `S` and the score of `p` alone,
/// `(|S|·mncs(S) + mncs({p})) / (|S| + 1)`. This recurrence is what makes
/// the indicator consistent: adding `p` shifts both sets' values toward
/// `p`'s score by the same averaging rule, which can never cross them.
#[must_use]
pub fn mncs_recurrence_holds(set: &PublicationSet, p: &Publication) -> bool {
    let n = Rational::from_integer(set.len() as u64);
    let lhs = mncs(&set.with(p.clone()));
    let rhs = &(&n * &mncs(set) + p.score()) / &(n + Rational::one());
    lhs == rhs
}

/// The finite instance space an exhaustive search enumerates: citation
/// counts up to `max_cites`, expected values from the rational grid
/// `{num/den : num <= max_expected_numerator, den in expected_denominators}`,
/// and sets of up to `max_set_size` publications.
///
/// Construction validates that the space is genuinely enumerable: at most
/// 10,000 distinct publications and 2,000,000 distinct sets. The default
/// bounds (citations to 12, numerators to 12, denominators {1, 2}, sets of
/// 2) describe 235 publications and 27,965 sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    max_cites: u64,
    max_expected_numerator: u64,
    expected_denominators: BTreeSet<u64>,
    max_set_size: usize,
}

const MAX_GRID: u64 = 10_000;
const MAX_SETS: u128 = 2_000_000;

impl SearchBounds {
    pub fn new(
        max_cites: u64,
        max_expected_numerator: u64,
        expected_denominators: impl IntoIterator<Item = u64>,
        max_set_size: usize,
    ) -> Result<Self> {
        if max_expected_numerator == 0 {
            return Err(Error::InvalidBounds("max_expected_numerator must be at least 1"));
        }
        if max_set_size == 0 {
            return Err(Error::InvalidBounds("max_set_size must be at least 1"));
        }
        if max_cites > 1_000_000 {
            return Err(Error::InvalidBounds("max_cites must be at most 1000000"));
        }
        if max_expected_numerator > 1_000_000 {
            return Err(Error::InvalidBounds(
                "max_expected_numerator must be at most 1000000",
            ));
        }
        let expected_denominators: BTreeSet<u64> = expected_denominators.into_iter().collect();
        if expected_denominators.is_empty() {
            return Err(Error::InvalidBounds("expected_denominators must be non-empty"));
        }
        if expected_denominators.contains(&0) {
            return Err(Error::InvalidBounds("expected_denominators must be positive"));
        }
        if expected_denominators.len() > 64 {
            return Err(Error::InvalidBounds(
                "expected_denominators must have at most 64 entries",
            ));
        }
        let bounds = Self {
            max_cites,
            max_expected_numerator,
            expected_denominators,
            max_set_size,
        };
        bounds.denominator_lcm()?;
        bounds.census()?;
        Ok(bounds)
    }

    #[must_use]
    pub fn max_cites(&self) -> u64 {
        self.max_cites
    }

    #[must_use]
    pub fn max_expected_numerator(&self) -> u64 {
        self.max_expected_numerator
    }

    pub fn expected_denominators(&self) -> impl Iterator<Item = u64> + '_ {
        self.expected_denominators.iter().copied()
    }

    #[must_use]
    pub fn max_set_size(&self) -> usize {
        self.max_set_size
    }

    fn denominator_lcm(&self) -> Result<u64> {
        let mut l: u64 = 1;
        for &den in &self.expected_denominators {
            l = (l / gcd(l, den))
                .checked_mul(den)
                .filter(|&l| l <= 1_000_000_000)
                .ok_or(Error::InvalidBounds("denominator lcm is too large"))?;
        }
        Ok(l)
    }

    /// Counts the publication grid and the set space without building
    /// either, enforcing the enumerability caps.
    fn census(&self) -> Result<(u64, u128)> {
        let mut nonzero_e: u64 = 0;
        let mut has_zero_e = false;
        for num in 0..=self.max_expected_numerator {
            for &den in &self.expected_denominators {
                if gcd(num, den) != 1 {
                    continue;
                }
                if num == 0 {
                    has_zero_e = true;
                } else {
                    nonzero_e += 1;
                }
            }
        }
        let grid = nonzero_e
            .checked_mul(self.max_cites + 1)
            .map(|g| g + u64::from(has_zero_e))
            .filter(|&g| g <= MAX_GRID)
            .ok_or(Error::InvalidBounds("publication grid exceeds 10000 entries"))?;

        // Multisets of size s over g publications: C(g + s - 1, s).
        let mut sets: u128 = 0;
        for s in 1..=self.max_set_size {
            let mut choose: u128 = 1;
            for k in 1..=s as u128 {
                choose = choose
                    .checked_mul(u128::from(grid) + k - 1)
                    .ok_or(Error::InvalidBounds("set space exceeds 2000000 entries"))?
                    / k;
            }
            sets = sets
                .checked_add(choose)
                .filter(|&t| t <= MAX_SETS)
                .ok_or(Error::InvalidBounds("set space exceeds 2000000 entries"))?;
        }
        Ok((grid, sets))
    }
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self::new(12, 12, [1, 2], 2).expect("default bounds are valid")
    }
}

/// One grid point: a publication plus the precomputed forms the search
/// needs (scaled integer expectation, exact score, word-sized score).
struct GridPublication {
    publication: Publication,
    cites: u64,
    /// `expected × lcm(denominators)`, always an integer.
    e_scaled: u64,
    score: Rational,
    score_frac: Frac,
}

/// All publications inside the bounds, sorted by `(cites, e numerator,
/// e denominator)`. Only reduced numerator/denominator pairs appear, so
/// every expected value occurs exactly once, and `cites > 0` never pairs
/// with a zero expectation.
fn enumerate_grid(bounds: &SearchBounds) -> (Vec<GridPublication>, u64) {
    let l = bounds
        .denominator_lcm()
        .expect("lcm validated at construction");
    let mut grid = Vec::new();
    for cites in 0..=bounds.max_cites {
        for num in 0..=bounds.max_expected_numerator {
            for &den in &bounds.expected_denominators {
                if gcd(num, den) != 1 || (cites > 0 && num == 0) {
                    continue;
                }
                let expected = Rational::new(num, den).expect("den is positive");
                let publication =
                    Publication::new(cites, expected).expect("zero e only pairs with zero c");
                let score = publication.score();
                let e_scaled = num * (l / den);
                let score_frac = if e_scaled == 0 {
                    Frac::new(1, 1)
                } else {
                    Frac::new(u128::from(cites) * u128::from(l), u128::from(e_scaled))
                };
                grid.push(GridPublication {
                    publication,
                    cites,
                    e_scaled,
                    score,
                    score_frac,
                });
            }
        }
    }
    (grid, l)
}

/// One enumerated set with running aggregates. The aggregates alone
/// determine every built-in indicator's value, which is what lets the
/// search evaluate millions of set-plus-publication combinations without
/// rebuilding sets.
struct SetEntry {
    set: PublicationSet,
    indices: Vec<u16>,
    sum_cites: u64,
    sum_expected: Rational,
    score_sum: Rational,
}

/// Enumerates every multiset of 1..=`max_size` grid publications as
/// non-decreasing index sequences. Returns the entries plus, per size, the
/// entry indices in lexicographic order of their index sequences (which,
/// because the grid is key-sorted, is also lexicographic order of the
/// publication key sequences).
fn build_entries(grid: &[GridPublication], max_size: usize) -> (Vec<SetEntry>, Vec<Vec<usize>>) {
    let mut entries: Vec<SetEntry> = Vec::new();
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); max_size];
    for (i, gp) in grid.iter().enumerate() {
        classes[0].push(entries.len());
        entries.push(SetEntry {
            set: PublicationSet::singleton(gp.publication.clone()),
            indices: vec![i as u16],
            sum_cites: gp.cites,
            sum_expected: gp.publication.expected().clone(),
            score_sum: gp.score.clone(),
        });
    }
    for size in 2..=max_size {
        let parents = classes[size - 2].clone();
        for parent_idx in parents {
            let first_extension = *entries[parent_idx]
                .indices
                .last()
                .expect("entries are non-empty") as usize;
            for (j, gp) in grid.iter().enumerate().skip(first_extension) {
                let parent = &entries[parent_idx];
                let child = SetEntry {
                    set: parent.set.with(gp.publication.clone()),
                    indices: {
                        let mut v = parent.indices.clone();
                        v.push(j as u16);
                        v
                    },
                    sum_cites: parent.sum_cites + gp.cites,
                    sum_expected: &parent.sum_expected + gp.publication.expected(),
                    score_sum: &parent.score_sum + &gp.score,
                };
                classes[size - 1].push(entries.len());
                entries.push(child);
            }
        }
    }
    (entries, classes)
}

/// An exact non-negative fraction in machine words, stored reduced. All
/// arithmetic is overflow-checked; [`fast_path_fits`] proves before a
/// search starts that no operation can actually overflow, so the checks
/// are a tripwire, never a code path.
#[derive(Clone, Copy, Debug)]
struct Frac {
    num: u128,
    den: u128,
}

impl Frac {
    fn new(num: u128, den: u128) -> Self {
        assert!(den > 0, "zero denominator");
        let g = gcd(num, den);
        Self {
            num: num / g,
            den: den / g,
        }
    }

    fn one() -> Self {
        Self { num: 1, den: 1 }
    }

    fn add(self, other: Self) -> Self {
        let num = self
            .num
            .checked_mul(other.den)
            .and_then(|a| other.num.checked_mul(self.den).and_then(|b| a.checked_add(b)))
            .expect("fraction addition overflow");
        let den = self.den.checked_mul(other.den).expect("fraction addition overflow");
        Self::new(num, den)
    }

    fn div_int(self, n: u128) -> Self {
        Self::new(self.num, self.den.checked_mul(n).expect("fraction division overflow"))
    }

    fn mul_int(self, n: u128) -> Self {
        Self::new(self.num.checked_mul(n).expect("fraction scaling overflow"), self.den)
    }

    #[cfg(test)]
    fn to_rational(self) -> Rational {
        Rational::from_u128_ratio(self.num, self.den)
    }
}

impl PartialEq for Frac {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Frac {}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        let left = self.num.checked_mul(other.den).expect("fraction comparison overflow");
        let right = other.num.checked_mul(self.den).expect("fraction comparison overflow");
        left.cmp(&right)
    }
}

/// Word-sized aggregates for one entry, used by the fast evaluation path.
struct FastStats {
    n: u128,
    sum_cites: u64,
    sum_e_scaled: u64,
    score_sum: Frac,
}

/// How the existence scan obtains indicator values. The two
/// implementations must agree exactly; the fast one exists because the
/// scan evaluates every (set, publication) combination in the space.
trait Eval {
    type Value: Ord + Clone;
    fn before(&self, entry: usize) -> Self::Value;
    fn after(&self, entry: usize, p: usize) -> Self::Value;
}

/// Word-fraction evaluation of a built-in indicator from set aggregates.
struct FastEval<'a> {
    kind: IndicatorKind,
    grid: &'a [GridPublication],
    lcm: u128,
    stats: Vec<FastStats>,
}

impl<'a> FastEval<'a> {
    fn new(
        kind: IndicatorKind,
        grid: &'a [GridPublication],
        entries: &[SetEntry],
        lcm: u64,
    ) -> Self {
        let stats = entries
            .iter()
            .map(|entry| {
                let mut sum_cites: u64 = 0;
                let mut sum_e_scaled: u64 = 0;
                let mut score_sum = Frac::new(0, 1);
                for &i in &entry.indices {
                    let gp = &grid[i as usize];
                    sum_cites += gp.cites;
                    sum_e_scaled += gp.e_scaled;
                    score_sum = score_sum.add(gp.score_frac);
                }
                FastStats {
                    n: entry.indices.len() as u128,
                    sum_cites,
                    sum_e_scaled,
                    score_sum,
                }
            })
            .collect();
        Self {
            kind,
            grid,
            lcm: u128::from(lcm),
            stats,
        }
    }

    fn value(&self, n: u128, sum_cites: u64, sum_e_scaled: u64, score_sum: Frac) -> Frac {
        match self.kind {
            IndicatorKind::CppFcsm | IndicatorKind::BruteForce => {
                let ratio = if sum_e_scaled == 0 {
                    // Zero total expectation forces zero total citations;
                    // the set counts as exactly average.
                    Frac::one()
                } else {
                    Frac::new(
                        u128::from(sum_cites)
                            .checked_mul(self.lcm)
                            .expect("fraction scaling overflow"),
                        u128::from(sum_e_scaled),
                    )
                };
                if self.kind == IndicatorKind::BruteForce {
                    ratio.mul_int(n)
                } else {
                    ratio
                }
            }
            IndicatorKind::Mncs => score_sum.div_int(n),
            IndicatorKind::Tncs => score_sum,
        }
    }
}

impl Eval for FastEval<'_> {
    type Value = Frac;

    fn before(&self, entry: usize) -> Frac {
        let s = &self.stats[entry];
        self.value(s.n, s.sum_cites, s.sum_e_scaled, s.score_sum)
    }

    fn after(&self, entry: usize, p: usize) -> Frac {
        let s = &self.stats[entry];
        let gp = &self.grid[p];
        self.value(
            s.n + 1,
            s.sum_cites + gp.cites,
            s.sum_e_scaled + gp.e_scaled,
            s.score_sum.add(gp.score_frac),
        )
    }
}

/// Exact evaluation: aggregate arithmetic for built-ins, black-box calls
/// for custom rules.
struct ExactEval<'a> {
    f: &'a IndicatorFn,
    grid: &'a [GridPublication],
    entries: &'a [SetEntry],
}

fn builtin_value(
    kind: IndicatorKind,
    n: u64,
    sum_cites: u64,
    sum_expected: &Rational,
    score_sum: &Rational,
) -> Rational {
    match kind {
        IndicatorKind::CppFcsm | IndicatorKind::BruteForce => {
            let ratio = Rational::from_integer(sum_cites)
                .checked_div(sum_expected)
                .unwrap_or_else(Rational::one);
            if kind == IndicatorKind::BruteForce {
                ratio * Rational::from_integer(n)
            } else {
                ratio
            }
        }
        IndicatorKind::Mncs => score_sum / &Rational::from_integer(n),
        IndicatorKind::Tncs => score_sum.clone(),
    }
}

fn exact_before(f: &IndicatorFn, entries: &[SetEntry], entry: usize) -> Rational {
    let e = &entries[entry];
    match f.builtin_kind() {
        Some(kind) => builtin_value(
            kind,
            e.indices.len() as u64,
            e.sum_cites,
            &e.sum_expected,
            &e.score_sum,
        ),
        None => f.evaluate(&e.set),
    }
}

fn exact_after(
    f: &IndicatorFn,
    grid: &[GridPublication],
    entries: &[SetEntry],
    entry: usize,
    p: usize,
) -> Rational {
    let e = &entries[entry];
    let gp = &grid[p];
    match f.builtin_kind() {
        Some(kind) => builtin_value(
            kind,
            e.indices.len() as u64 + 1,
            e.sum_cites + gp.cites,
            &(&e.sum_expected + gp.publication.expected()),
            &(&e.score_sum + &gp.score),
        ),
        None => f.evaluate(&e.set.with(gp.publication.clone())),
    }
}

impl Eval for ExactEval<'_> {
    type Value = Rational;

    fn before(&self, entry: usize) -> Rational {
        exact_before(self.f, self.entries, entry)
    }

    fn after(&self, entry: usize, p: usize) -> Rational {
        exact_after(self.f, self.grid, self.entries, entry, p)
    }
}

/// Decides whether every quantity the fast path can produce fits in u128,
/// using loose upper bounds on numerators, denominators, the addition
/// intermediates, and the comparison cross-products. If not, the search
/// falls back to exact big-rational evaluation.
fn fast_path_fits(grid: &[GridPublication], max_set_size: usize, lcm: u64) -> bool {
    fn check(grid: &[GridPublication], max_set_size: usize, lcm: u64) -> Option<()> {
        let n = max_set_size as u128 + 1;
        let l = u128::from(lcm);
        let mut score_den_lcm: u128 = 1;
        let mut max_cites: u128 = 1;
        let mut max_e: u128 = 1;
        for gp in grid {
            let den = gp.score_frac.den;
            score_den_lcm = (score_den_lcm / gcd(score_den_lcm, den)).checked_mul(den)?;
            max_cites = max_cites.max(u128::from(gp.cites));
            max_e = max_e.max(u128::from(gp.e_scaled));
        }
        // Average-of-ratios side: reduced score sums are bounded by
        // n·c·l·s over denominators dividing s; addition multiplies in one
        // more factor of s, and comparisons cross-multiply by s²·n².
        let num = n
            .checked_mul(max_cites)?
            .checked_mul(l)?
            .checked_mul(score_den_lcm)?;
        let dens = score_den_lcm
            .checked_mul(score_den_lcm)?
            .checked_mul(n)?
            .checked_mul(n)?;
        num.checked_mul(score_den_lcm)?;
        num.checked_mul(n)?.checked_mul(dens)?;
        // Ratio-of-averages side: numerators up to n·c·l·n, denominators
        // up to n·e.
        let bn = n.checked_mul(max_cites)?.checked_mul(l)?.checked_mul(n)?;
        let bd = n.checked_mul(max_e)?;
        bn.checked_mul(bd)?;
        Some(())
    }
    check(grid, max_set_size, lcm).is_some()
}

/// Decides whether any violating pair exists, by scanning each comparable
/// class of sets once per candidate publication.
///
/// Within one class, sort the sets by their before-value. For a fixed
/// added publication, some pair violates consistency iff the after-values
/// fail to be strictly aligned with that order somewhere, and any such
/// failure shows up between neighbours: walking the sorted sequence, every
/// adjacent step must keep equal before-values at equal after-values and
/// strictly increasing before-values at strictly increasing after-values.
/// If every adjacent step complies, composing steps shows every pair
/// complies (equal chains stay equal; any chain containing a strict
/// increase ends strictly higher), so checking neighbours decides
/// existence over all pairs. That turns a quadratic pair scan into a
/// linear one without giving up exhaustiveness.
fn violation_exists<E: Eval>(eval: &E, scan_classes: &[Vec<usize>], grid_len: usize) -> bool {
    let sorted: Vec<Vec<(E::Value, usize)>> = scan_classes
        .iter()
        .map(|class| {
            let mut keyed: Vec<(E::Value, usize)> =
                class.iter().map(|&i| (eval.before(i), i)).collect();
            keyed.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
            keyed
        })
        .collect();
    for p in 0..grid_len {
        for class in &sorted {
            let mut prev: Option<(&E::Value, E::Value)> = None;
            for (before, entry) in class {
                let after = eval.after(*entry, p);
                if let Some((prev_before, prev_after)) = &prev {
                    let concordant = match (*prev_before).cmp(before) {
                        Ordering::Equal => *prev_after == after,
                        Ordering::Less => *prev_after < after,
                        Ordering::Greater => unreachable!("class is sorted by before-value"),
                    };
                    if !concordant {
                        return true;
                    }
                }
                prev = Some((before, after));
            }
        }
    }
    false
}

/// Extracts the first violating triple in the documented deterministic
/// order, given that one exists. Exact arithmetic throughout.
fn first_witness(
    f: &IndicatorFn,
    grid: &[GridPublication],
    entries: &[SetEntry],
    classes: &[Vec<usize>],
    definition: ConsistencyKind,
) -> Witness {
    let befores: Vec<Rational> = (0..entries.len())
        .map(|i| exact_before(f, entries, i))
        .collect();
    let max = classes.len();
    for total in 2..=2 * max {
        for s1 in 1..=max {
            let s2 = total.saturating_sub(s1);
            if s2 < 1 || s2 > max {
                continue;
            }
            if definition == ConsistencyKind::Average && s1 != s2 {
                continue;
            }
            for &i1 in &classes[s1 - 1] {
                let a = &befores[i1];
                let afters1: Vec<Rational> = (0..grid.len())
                    .map(|p| exact_after(f, grid, entries, i1, p))
                    .collect();
                for &i2 in &classes[s2 - 1] {
                    let b = &befores[i2];
                    let before_ord = a.cmp(b);
                    for (p, gp) in grid.iter().enumerate() {
                        let c = &afters1[p];
                        let d = exact_after(f, grid, entries, i2, p);
                        if c.cmp(&d) != before_ord {
                            return Witness::new(
                                entries[i1].set.clone(),
                                entries[i2].set.clone(),
                                gp.publication.clone(),
                                (a.clone(), b.clone()),
                                (c.clone(), d),
                            );
                        }
                    }
                }
            }
        }
    }
    unreachable!("existence scan reported a violation but ordered extraction found none")
}

/// Exhaustively searches the bounded space for a consistency
/// counterexample, returning the first one in a fixed deterministic order,
/// or `None` if every triple within bounds preserves rankings.
///
/// The order: triples are visited by ascending `|S1| + |S2|`, then
/// ascending `|S1|`, then `S1` in lexicographic order of its publication
/// keys (each key being `(cites, e numerator, e denominator)`, elements
/// sorted ascending), then `S2` likewise, then the added publication in
/// key order. Under the average definition only equal-size pairs are
/// visited. The same (S1, S2) pair is visited in both orders, so the
/// returned witness may have `f(S1) < f(S2)`.
///
/// Built-in indicators are evaluated from per-set aggregates, in machine
/// words when the bounds provably fit; custom rules are evaluated as black
/// boxes on materialized sets, which for the default bounds means a few
/// million evaluations. The result is identical either way.
#[must_use]
pub fn search_counterexample(
    f: &IndicatorFn,
    bounds: &SearchBounds,
    definition: ConsistencyKind,
) -> Option<Witness> {
    let (grid, lcm) = enumerate_grid(bounds);
    let (entries, classes) = build_entries(&grid, bounds.max_set_size);
    let scan_classes: Vec<Vec<usize>> = match definition {
        ConsistencyKind::Total => vec![(0..entries.len()).collect()],
        ConsistencyKind::Average => classes.clone(),
    };
    let exists = match f.builtin_kind() {
        Some(kind) if fast_path_fits(&grid, bounds.max_set_size, lcm) => {
            let eval = FastEval::new(kind, &grid, &entries, lcm);
            violation_exists(&eval, &scan_classes, grid.len())
        }
        _ => {
            let eval = ExactEval {
                f,
                grid: &grid,
                entries: &entries,
            };
            violation_exists(&eval, &scan_classes, grid.len())
        }
    };
    if !exists {
        return None;
    }
    Some(first_witness(f, &grid, &entries, &classes, definition))
}
