//! Friedman's order-invariant-graph predicates, and a toy-scale search
//! skeleton over candidate graphs.
//!
//! The statement these support: for all `k, n, r > 0`, every order invariant
//! graph on the size-≤k sets of rationals has a free
//! `{x_1..x_r, ush(x_1)..ush(x_r)}` of bounded complexity, with each prefix
//! `{x_1..x_t}` (for scheduled lengths `t`) reducing
//! `[x_1 ∪ … ∪ x_i ∪ {0..n}]^{≤k}`. At the statement's real parameters the
//! candidate-vertex universe is astronomically large (the complexity bound
//! is a factorial of a factorial); everything here therefore exposes the
//! *predicates* exactly, plus a search loop that runs end-to-end only at
//! caller-supplied toy bounds.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;

/// An exact rational in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rat {
    num: i64,
    den: i64,
}

impl Rat {
    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        Rat { num, den }
    }

    pub fn integer(n: i64) -> Rat {
        Rat { num: n, den: 1 }
    }

    pub fn num(self) -> i64 {
        self.num
    }

    pub fn den(self) -> i64 {
        self.den
    }

    fn is_nonnegative(self) -> bool {
        self.num >= 0
    }

    /// Adds exactly one; lowest terms are preserved since
    /// gcd(num + den, den) = gcd(num, den).
    fn plus_one(self) -> Rat {
        Rat {
            num: self.num + self.den,
            den: self.den,
        }
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Rat) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Rat) -> Ordering {
        // Exact: i64 products cannot overflow i128.
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// `complexity(a/b) = max(|a|, b)` in lowest terms.
pub fn complexity(q: Rat) -> u64 {
    q.num.unsigned_abs().max(q.den as u64)
}

/// A vertex: a finite set of rationals, stored strictly ascending.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(Vec<Rat>);

impl Vertex {
    /// Builds the vertex for a set of rationals (duplicates collapse).
    pub fn from_set(elems: impl IntoIterator<Item = Rat>) -> Vertex {
        let set: BTreeSet<Rat> = elems.into_iter().collect();
        Vertex(set.into_iter().collect())
    }

    pub fn elements(&self) -> &[Rat] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn complexity(&self) -> u64 {
        self.0.iter().copied().map(complexity).max().unwrap_or(0)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, q) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, "}}")
    }
}

/// Copy of the set with every non-negative element incremented by one.
pub fn ush(x: &Vertex) -> Vertex {
    let shifted: Vec<Rat> = x
        .elements()
        .iter()
        .map(|&q| if q.is_nonnegative() { q.plus_one() } else { q })
        .collect();
    // The negative prefix is untouched and the non-negative suffix shifts
    // uniformly, so strict ascent is preserved; a collision would be a bug.
    assert!(
        shifted.windows(2).all(|w| w[0] < w[1]),
        "upper shift broke strict ascent"
    );
    Vertex(shifted)
}

/// Reverse-lexicographic comparison: the last (largest) elements weigh most;
/// on a common suffix the shorter vertex comes first.
pub fn rlex_cmp(x: &Vertex, y: &Vertex) -> Ordering {
    let xs = x.elements();
    let ys = y.elements();
    for (a, b) in xs.iter().rev().zip(ys.iter().rev()) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    xs.len().cmp(&ys.len())
}

/// `x ≤_rlex y`.
pub fn rlex_le(x: &Vertex, y: &Vertex) -> bool {
    rlex_cmp(x, y) != Ordering::Greater
}

/// Order equivalence of vertex pairs: `(a,b)` and `(c,d)` have matching
/// shapes and identical cross-comparison matrices. Equalities between
/// elements of `a` and `b` must be mirrored too — within a vertex the order
/// is fixed by sortedness, so cross-relations are the whole order type.
pub fn order_equivalent(a: &Vertex, b: &Vertex, c: &Vertex, d: &Vertex) -> bool {
    if a.len() != c.len() || b.len() != d.len() {
        return false;
    }
    for (ai, ci) in a.elements().iter().zip(c.elements()) {
        for (bj, dj) in b.elements().iter().zip(d.elements()) {
            if ai.cmp(bj) != ci.cmp(dj) {
                return false;
            }
        }
    }
    true
}

/// A finite graph over explicit vertices with a dense edge table.
#[derive(Debug, Clone)]
pub struct OrderGraph {
    vertices: Vec<Vertex>,
    edges: Vec<bool>,
}

impl OrderGraph {
    /// Takes the raw edge table, row-major: `edges[i·|V| + j]`.
    pub fn new(vertices: Vec<Vertex>, edges: Vec<bool>) -> OrderGraph {
        assert_eq!(edges.len(), vertices.len() * vertices.len());
        OrderGraph { vertices, edges }
    }

    /// Builds the symmetric irreflexive graph where distinct `u, v` are
    /// adjacent iff the predicate holds for either orientation.
    pub fn from_predicate(
        vertices: Vec<Vertex>,
        pred: impl Fn(&Vertex, &Vertex) -> bool,
    ) -> OrderGraph {
        let n = vertices.len();
        let mut edges = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                if i != j && (pred(&vertices[i], &vertices[j]) || pred(&vertices[j], &vertices[i]))
                {
                    edges[i * n + j] = true;
                }
            }
        }
        OrderGraph { vertices, edges }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edge(&self, i: usize, j: usize) -> bool {
        self.edges[i * self.vertices.len() + j]
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.vertices.iter().position(|u| u == v)
    }

    pub fn is_irreflexive(&self) -> bool {
        (0..self.vertices.len()).all(|i| !self.edge(i, i))
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| (0..n).all(|j| self.edge(i, j) == self.edge(j, i)))
    }

    /// No edge between any two members of `s` (and no self-loop on them).
    pub fn is_free(&self, s: &[usize]) -> bool {
        s.iter()
            .all(|&i| s.iter().all(|&j| !self.edge(i, j)))
    }

    /// `X` reduces `Y`: every `y ∈ Y` has an `x ∈ X` with `x = y`, or with
    /// `x ≤_rlex y` and an edge between them.
    pub fn reduces(&self, xs: &[usize], ys: &[usize]) -> bool {
        ys.iter().all(|&y| {
            xs.iter().any(|&x| {
                x == y
                    || (rlex_le(&self.vertices[x], &self.vertices[y]) && self.edge(x, y))
            })
        })
    }

    /// The edge relation is irreflexive, symmetric, and constant on
    /// order-equivalence classes of vertex pairs.
    pub fn check_order_invariance(&self) -> bool {
        if !self.is_irreflexive() || !self.is_symmetric() {
            return false;
        }
        let n = self.vertices.len();
        for i in 0..n {
            for j in 0..n {
                for p in 0..n {
                    for q in 0..n {
                        if order_equivalent(
                            &self.vertices[i],
                            &self.vertices[j],
                            &self.vertices[p],
                            &self.vertices[q],
                        ) && self.edge(i, j) != self.edge(p, q)
                        {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

/// Every rational of complexity at most `c`, ascending.
pub fn rationals_of_complexity(c: u64) -> Vec<Rat> {
    assert!(c >= 1 && c <= i64::MAX as u64);
    let c = c as i64;
    let mut set = BTreeSet::new();
    for den in 1..=c {
        for num in -c..=c {
            set.insert(Rat::new(num, den));
        }
    }
    set.into_iter().collect()
}

/// `[nums]^{≤k}`: every subset of size at most `k` (including the empty
/// set), as vertices sorted ascending by rlex.
pub fn subsets_up_to(nums: &[Rat], k: usize) -> Vec<Vertex> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    build_subsets(nums, k, 0, &mut current, &mut out);
    out.sort_by(rlex_cmp);
    out
}

fn build_subsets(
    nums: &[Rat],
    k: usize,
    from: usize,
    current: &mut Vec<Rat>,
    out: &mut Vec<Vertex>,
) {
    out.push(Vertex(current.clone()));
    if current.len() == k {
        return;
    }
    for i in from..nums.len() {
        current.push(nums[i]);
        build_subsets(nums, k, i + 1, current, out);
        current.pop();
    }
}

/// How long the reducing prefixes are scheduled to be at stage `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixRule {
    /// The statement's own schedule, `t = (8·k·n·i)!` — at any honest
    /// parameters this exceeds `r` immediately, so the reduction clause is
    /// vacuous at toy scale.
    Factorial,
    /// `t = i`: a toy schedule that makes the reduction clause bite, so the
    /// `reduces` predicate is exercised inside the search.
    Linear,
}

impl PrefixRule {
    fn prefix_len(self, k: u64, n: u64, i: u64) -> u64 {
        match self {
            PrefixRule::Linear => i,
            PrefixRule::Factorial => {
                let base = 8u64.saturating_mul(k).saturating_mul(n).saturating_mul(i);
                let mut acc = 1u64;
                for f in 2..=base.min(25) {
                    acc = acc.saturating_mul(f);
                }
                if base > 25 {
                    u64::MAX
                } else {
                    acc
                }
            }
        }
    }
}

/// Parameters for one `(k, n, r)` stage of the search, at toy scale.
#[derive(Debug, Clone)]
pub struct ToySearch {
    /// Max vertex size.
    pub k: usize,
    /// The integers `0..=n` joined into the reduction targets.
    pub n: u64,
    /// Size of the candidate free family.
    pub r: usize,
    /// Stands in for the statement's `(8knr)!` complexity bound.
    pub complexity_bound: u64,
    pub prefix_rule: PrefixRule,
    /// Edge assignments to try before giving up.
    pub max_graphs: u64,
}

/// Outcome of [`search_one_triple`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchVerdict {
    /// Some graph over the candidate vertices satisfies validity
    /// conditions 1–3; its edge table is returned.
    ValidFound { graphs_tried: u64, edges: Vec<bool> },
    /// Every edge assignment fails the conditions — the machine encoding
    /// the statement would halt at this stage.
    NoneValid { graphs_tried: u64 },
    BudgetOut { graphs_tried: u64 },
}

/// Validity condition 3: some size-`r` subset `x_1 ≤_rlex … ≤_rlex x_r` of
/// the vertices has all upper shifts present, the combined family
/// `{x_1..x_r, ush(x_1)..ush(x_r)}` free, and each scheduled prefix
/// `{x_1..x_t}` reducing `[x_1 ∪ … ∪ x_i ∪ {0..n}]^{≤k}`.
pub fn condition3(g: &OrderGraph, p: &ToySearch) -> bool {
    let n_vertices = g.vertices().len();
    if p.r > n_vertices {
        return false;
    }
    let mut combo: Vec<usize> = (0..p.r).collect();
    loop {
        if subset_witnesses(g, p, &combo) {
            return true;
        }
        // Next r-combination of 0..n_vertices in lexicographic order.
        let mut i = p.r;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if combo[i] != i + n_vertices - p.r {
                break;
            }
            if i == 0 {
                return false;
            }
        }
        combo[i] += 1;
        for j in i + 1..p.r {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

fn subset_witnesses(g: &OrderGraph, p: &ToySearch, combo: &[usize]) -> bool {
    // x_1..x_r in rlex order.
    let mut xs: Vec<usize> = combo.to_vec();
    xs.sort_by(|&a, &b| rlex_cmp(&g.vertices()[a], &g.vertices()[b]));

    // All upper shifts must exist among the vertices.
    let mut family = xs.clone();
    for &x in &xs {
        match g.index_of(&ush(&g.vertices()[x])) {
            Some(u) => family.push(u),
            None => return false,
        }
    }
    family.sort_unstable();
    family.dedup();
    if !g.is_free(&family) {
        return false;
    }

    // Scheduled reductions.
    for i in 1..=p.r as u64 {
        let t = p.prefix_rule.prefix_len(p.k as u64, p.n, i);
        if t > p.r as u64 {
            break; // the schedule only grows with i
        }
        let prefix = &xs[..t as usize];
        let mut pool: Vec<Rat> = (0..=p.n as i64).map(Rat::integer).collect();
        for &x in &xs[..i as usize] {
            pool.extend_from_slice(g.vertices()[x].elements());
        }
        let pool = Vertex::from_set(pool);
        let targets: Vec<usize> = subsets_up_to(pool.elements(), p.k)
            .iter()
            .map(|v| {
                g.index_of(v)
                    .expect("reduction target missing from the vertex universe; raise complexity_bound to at least n")
            })
            .collect();
        if !g.reduces(prefix, &targets) {
            return false;
        }
    }
    true
}

/// Conditions 1–3 together.
pub fn graph_is_valid(g: &OrderGraph, p: &ToySearch) -> bool {
    g.is_irreflexive() && g.is_symmetric() && condition3(g, p)
}

/// Runs one `(k, n, r)` stage: builds the candidate vertex universe and
/// tries every edge assignment (in increasing bitmask order) until one is
/// valid, all fail, or the budget runs out.
pub fn search_one_triple(p: &ToySearch) -> SearchVerdict {
    assert!(
        p.complexity_bound >= p.n,
        "reduction targets include 0..=n; complexity_bound must cover them"
    );
    let vertices = subsets_up_to(&rationals_of_complexity(p.complexity_bound), p.k);
    let n = vertices.len();
    let bits = n * n;
    assert!(bits < 64, "vertex universe too large for exhaustive edge search");
    let total: u64 = 1u64 << bits;

    let vertices_template = vertices;
    let mut graphs_tried = 0u64;
    for mask in 0..total {
        if graphs_tried == p.max_graphs {
            return SearchVerdict::BudgetOut { graphs_tried };
        }
        graphs_tried += 1;
        let edges: Vec<bool> = (0..bits).map(|b| mask >> b & 1 == 1).collect();
        let g = OrderGraph::new(vertices_template.clone(), edges);
        if graph_is_valid(&g, p) {
            return SearchVerdict::ValidFound {
                graphs_tried,
                edges: g.edges,
            };
        }
    }
    SearchVerdict::NoneValid { graphs_tried }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(elems: &[(i64, i64)]) -> Vertex {
        Vertex::from_set(elems.iter().map(|&(n, d)| Rat::new(n, d)))
    }

    #[test]
    fn rationals_reduce_and_order() {
        assert_eq!(Rat::new(2, 4), Rat::new(1, 2));
        assert_eq!(Rat::new(-2, -4), Rat::new(1, 2));
        assert_eq!(Rat::new(2, -4), Rat::new(-1, 2));
        assert!(Rat::new(1, 3) < Rat::new(1, 2));
        assert!(Rat::new(-1, 2) < Rat::new(1, 3));
        assert_eq!(complexity(Rat::new(2, 4)), 2);
        assert_eq!(complexity(Rat::new(-7, 3)), 7);
        assert_eq!(complexity(Rat::integer(0)), 1);
    }

    #[test]
    fn ush_shifts_nonnegatives_only() {
        assert_eq!(ush(&v(&[(-1, 1), (0, 1), (1, 1)])), v(&[(-1, 1), (1, 1), (2, 1)]));
        assert_eq!(ush(&Vertex::from_set([])), Vertex::from_set([]));
        assert_eq!(
            ush(&v(&[(-5, 2), (-1, 1), (7, 2)])),
            v(&[(-5, 2), (-1, 1), (9, 2)])
        );
    }

    #[test]
    fn rlex_examples() {
        let x = v(&[(1, 1), (5, 1)]);
        let y = v(&[(2, 1), (5, 1)]);
        assert!(rlex_le(&x, &x), "reflexive");
        assert!(rlex_le(&x, &y), "last elements tie, then 1 < 2");
        assert!(!rlex_le(&y, &x));
        let short = v(&[(5, 1)]);
        assert!(rlex_le(&short, &x), "shorter comes first on a common suffix");
        assert!(!rlex_le(&x, &short));
    }

    #[test]
    fn order_equivalence_examples() {
        let a = v(&[(1, 1), (3, 1)]);
        let b = v(&[(2, 1), (4, 1)]);
        let c = v(&[(10, 1), (30, 1)]);
        let d = v(&[(20, 1), (40, 1)]);
        assert!(order_equivalent(&a, &b, &c, &d), "both realize a1<b1<a2<b2");
        assert!(order_equivalent(&a, &b, &a, &b), "reflexive");
        let d_bad = v(&[(2, 1), (3, 1)]);
        assert!(
            !order_equivalent(&a, &b, &v(&[(1, 1), (4, 1)]), &d_bad),
            "comparison matrices differ"
        );
        // Cross-equality must be mirrored: ({1},{1}) vs ({1},{2}).
        let s1 = v(&[(1, 1)]);
        let s2 = v(&[(2, 1)]);
        assert!(!order_equivalent(&s1, &s1, &s1, &s2));
        // Upper shift preserves the whole comparison matrix.
        let p = v(&[(-1, 2), (0, 1), (3, 2)]);
        let q = v(&[(-3, 1), (1, 2)]);
        assert!(order_equivalent(&p, &q, &ush(&p), &ush(&q)));
    }

    #[test]
    fn interleaving_graph_on_six_vertices() {
        // Vertices over {1,2,3,4}; edge iff sizes are 2 and the sets
        // interleave as a1 < b1 < a2 < b2 in either orientation.
        let vertices = vec![
            v(&[(1, 1), (2, 1)]),
            v(&[(3, 1), (4, 1)]),
            v(&[(1, 1), (3, 1)]),
            v(&[(2, 1), (4, 1)]),
            v(&[(1, 1), (4, 1)]),
            v(&[(2, 1), (3, 1)]),
        ];
        let g = OrderGraph::from_predicate(vertices, |a, b| {
            a.len() == 2
                && b.len() == 2
                && a.elements()[0] < b.elements()[0]
                && b.elements()[0] < a.elements()[1]
                && a.elements()[1] < b.elements()[1]
        });
        assert!(g.is_irreflexive() && g.is_symmetric());
        assert!(g.check_order_invariance());
        // The only interleaving pair is {1,3}–{2,4}.
        let mut edges = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                if g.edge(i, j) {
                    edges.push((i, j));
                }
            }
        }
        assert_eq!(edges, [(2, 3)]);
        // Maximal free sets: drop either endpoint of that edge.
        let all: Vec<usize> = (0..6).collect();
        assert!(!g.is_free(&all));
        let mut maximal = Vec::new();
        for drop in 0..6 {
            let s: Vec<usize> = all.iter().copied().filter(|&i| i != drop).collect();
            if g.is_free(&s) {
                maximal.push(drop);
            }
        }
        assert_eq!(maximal, [2, 3]);
    }

    #[test]
    fn invariance_counterexamples() {
        // Two order-equivalent pairs, an edge on exactly one of them.
        let vertices = vec![
            v(&[(1, 1)]),
            v(&[(2, 1)]),
            v(&[(10, 1)]),
            v(&[(20, 1)]),
        ];
        let n = 4;
        let mut edges = vec![false; n * n];
        edges[1] = true; // 0-1
        edges[n] = true; // 1-0
        let g = OrderGraph::new(vertices, edges);
        assert!(g.is_irreflexive() && g.is_symmetric());
        assert!(
            !g.check_order_invariance(),
            "({{1}},{{2}}) and ({{10}},{{20}}) are order equivalent but disagree"
        );
    }

    #[test]
    fn reduces_via_equality_and_via_edges() {
        let vertices = vec![Vertex::from_set([]), v(&[(0, 1)]), v(&[(1, 1)])];
        let n = 3;
        // Edges: {} - {0} and {} - {1}.
        let mut edges = vec![false; n * n];
        for (i, j) in [(0, 1), (1, 0), (0, 2), (2, 0)] {
            edges[i * n + j] = true;
        }
        let g = OrderGraph::new(vertices, edges);
        assert!(g.reduces(&[0, 1], &[0, 1]), "X = Y reduces via equality");
        assert!(g.reduces(&[0], &[0, 1, 2]), "{{}} reduces everything it touches");
        // {0} does not reduce {}: not equal, and rlex puts {} first.
        assert!(!g.reduces(&[1], &[0]));
        // No edge {0}-{1}: equality is the only route, and it fails.
        assert!(!g.reduces(&[1], &[2]));
    }

    #[test]
    fn vertex_universe_at_complexity_one() {
        let nums = rationals_of_complexity(1);
        assert_eq!(
            nums,
            [Rat::integer(-1), Rat::integer(0), Rat::integer(1)]
        );
        let vs = subsets_up_to(&nums, 1);
        assert_eq!(vs.len(), 4);
        assert_eq!(vs[0], Vertex::from_set([]), "empty vertex first under rlex");
        assert_eq!(vs[1], v(&[(-1, 1)]));
        assert_eq!(vs[2], v(&[(0, 1)]));
        assert_eq!(vs[3], v(&[(1, 1)]));
    }

    #[test]
    fn toy_search_with_vacuous_schedule_accepts_the_edgeless_graph() {
        let p = ToySearch {
            k: 1,
            n: 1,
            r: 1,
            complexity_bound: 1,
            prefix_rule: PrefixRule::Factorial,
            max_graphs: 1 << 16,
        };
        // (8·1·1·1)! = 40320 > r, so condition 3 is just the free family:
        // x_1 = {} works in the edgeless graph, the very first mask.
        match search_one_triple(&p) {
            SearchVerdict::ValidFound { graphs_tried, edges } => {
                assert_eq!(graphs_tried, 1);
                assert!(edges.iter().all(|&e| !e));
            }
            other => panic!("expected an immediate witness, got {other:?}"),
        }
    }

    #[test]
    fn toy_search_with_linear_schedule_needs_real_edges() {
        let p = ToySearch {
            k: 1,
            n: 1,
            r: 1,
            complexity_bound: 1,
            prefix_rule: PrefixRule::Linear,
            max_graphs: 1 << 16,
        };
        // With t = i the prefix {x_1} must reduce [x_1 ∪ {0,1}]^{≤1}.
        // Only x_1 = {} can work (rlex puts {} before every other vertex),
        // and it needs edges to {0} and {1}. Vertices in rlex order are
        // [{}, {-1}, {0}, {1}] = indices 0..4, so the minimal valid mask
        // has exactly the bits (0,2), (2,0), (0,3), (3,0).
        match search_one_triple(&p) {
            SearchVerdict::ValidFound { graphs_tried, edges } => {
                let n = 4;
                let mut want = vec![false; n * n];
                for (i, j) in [(0, 2), (2, 0), (0, 3), (3, 0)] {
                    want[i * n + j] = true;
                }
                assert_eq!(edges, want);
                // mask = 2^2 + 2^3 + 2^8 + 2^12 = 4364, tried 0..=4364.
                assert_eq!(graphs_tried, 4365);
            }
            other => panic!("expected a witness with edges, got {other:?}"),
        }
    }

    #[test]
    fn impossible_demands_exhaust_the_space() {
        // r = 2 but only the empty vertex has its upper shift present and
        // free-compatible... with complexity bound 1 and k = 1 the universe
        // is 4 vertices; demand r = 5 > |V|: no subset qualifies.
        let p = ToySearch {
            k: 1,
            n: 1,
            r: 5,
            complexity_bound: 1,
            prefix_rule: PrefixRule::Factorial,
            max_graphs: 1 << 16,
        };
        assert_eq!(
            search_one_triple(&p),
            SearchVerdict::NoneValid {
                graphs_tried: 1 << 16
            }
        );
    }

    #[test]
    fn budget_stops_the_search() {
        let p = ToySearch {
            k: 1,
            n: 1,
            r: 5,
            complexity_bound: 1,
            prefix_rule: PrefixRule::Factorial,
            max_graphs: 100,
        };
        assert_eq!(
            search_one_triple(&p),
            SearchVerdict::BudgetOut { graphs_tried: 100 }
        );
    }
}
