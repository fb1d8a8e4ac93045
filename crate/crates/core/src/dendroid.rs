//! Dendroid families of permutations.
//!
//! A family is dendroid when its cycle diagram (Schreier graph plus one
//! 2-cell per finite cycle) is contractible. Equivalently, the core graph
//! obtained by deleting one edge from every finite cycle of every generator
//! is a tree. On infinite alphabets every shifted ray tail beyond the radius
//! is a one-ended path touched by a single generator, so it is condensed to
//! one boundary vertex per strand without changing the answer.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::alphabet::{AlphabetSpec, Letter};
use crate::dot::{self, DotGraph};
use crate::error::{Error, Result};
use crate::permutation::{End, FdPerm, Strand};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum CoreVertex {
    Letter(Letter),
    /// Condensed tail of a shifted ray beyond the radius.
    Boundary(Strand),
}

impl fmt::Display for CoreVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreVertex::Letter(l) => write!(f, "{l}"),
            CoreVertex::Boundary(s) => write!(f, "{s}"),
        }
    }
}

impl Serialize for CoreVertex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoreEdge {
    pub from: usize,
    pub to: usize,
    /// Position of the generator in the family.
    pub generator: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoreGraph {
    pub radius: u64,
    pub vertices: Vec<CoreVertex>,
    pub edges: Vec<CoreEdge>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// The core graph is a tree; these are all of its edges.
    SpanningTree { edges: Vec<usize> },
    /// Edges of a cycle in the core graph.
    Cycle { edges: Vec<usize> },
    /// A vertex not reachable from vertex 0.
    Disconnected { unreached: usize },
    /// More than one generator translates the same ray.
    SharedTail { ray: String, generators: Vec<usize> },
    /// No generator translates the ray, so its far letters are isolated.
    UncoveredTail { ray: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct DendroidVerdict {
    pub is_dendroid: bool,
    pub certificate: Certificate,
    /// Present unless a tail check failed before condensation.
    pub graph: Option<CoreGraph>,
}

impl DendroidVerdict {
    /// One-line explanation using generator names.
    pub fn describe(&self, names: &[String]) -> String {
        let name = |i: usize| names.get(i).cloned().unwrap_or_else(|| format!("#{i}"));
        let edge = |g: &CoreGraph, e: usize| {
            let e = g.edges[e];
            format!(
                "{}-[{}]-{}",
                g.vertices[e.from],
                name(e.generator),
                g.vertices[e.to]
            )
        };
        match (&self.certificate, &self.graph) {
            (Certificate::SpanningTree { edges }, Some(g)) => {
                format!(
                    "core graph is a tree ({} vertices, {} edges)",
                    g.vertices.len(),
                    edges.len()
                )
            }
            (Certificate::Cycle { edges }, Some(g)) => {
                let parts: Vec<String> = edges.iter().map(|&e| edge(g, e)).collect();
                format!("core graph has a cycle: {}", parts.join(", "))
            }
            (Certificate::Disconnected { unreached }, Some(g)) => {
                format!(
                    "core graph is disconnected: {} is not reachable",
                    g.vertices[*unreached]
                )
            }
            (Certificate::SharedTail { ray, generators }, _) => {
                let gens: Vec<String> = generators.iter().map(|&i| name(i)).collect();
                format!(
                    "ray {ray} is translated by several generators: {}",
                    gens.join(", ")
                )
            }
            (Certificate::UncoveredTail { ray }, _) => {
                format!("no generator translates ray {ray}; its far letters are isolated")
            }
            _ => "inconsistent verdict".into(),
        }
    }
}

fn shared_alphabet(family: &[FdPerm]) -> Result<Arc<AlphabetSpec>> {
    let first = family
        .first()
        .ok_or_else(|| Error::Incompatible("an empty family has no alphabet".into()))?
        .alphabet();
    if family.iter().any(|p| p.alphabet() != first) {
        return Err(Error::Incompatible(
            "permutations are over different alphabets".into(),
        ));
    }
    Ok(first.clone())
}

/// Radius beyond which every ray carries only pure translation edges:
/// the largest window bound plus the largest shift (at least one), plus
/// `|family| + 1`.
pub fn auto_radius(family: &[FdPerm]) -> u64 {
    let w = family.iter().map(FdPerm::window_bound).max().unwrap_or(0);
    let d = family
        .iter()
        .map(FdPerm::max_shift)
        .max()
        .unwrap_or(0)
        .max(1);
    w + d + family.len() as u64 + 1
}

/// For each ray, the single generator translating it, or the certificate
/// explaining why there is none.
fn tail_owners(
    family: &[FdPerm],
    alphabet: &AlphabetSpec,
) -> std::result::Result<BTreeMap<String, usize>, Certificate> {
    let mut owners = BTreeMap::new();
    for ray in alphabet.rays() {
        let gens: Vec<usize> = family
            .iter()
            .enumerate()
            .filter(|(_, p)| p.shift(ray) != 0)
            .map(|(i, _)| i)
            .collect();
        match gens.as_slice() {
            [] => {
                return Err(Certificate::UncoveredTail {
                    ray: ray.to_string(),
                })
            }
            [one] => {
                owners.insert(ray.to_string(), *one);
            }
            _ => {
                return Err(Certificate::SharedTail {
                    ray: ray.to_string(),
                    generators: gens,
                })
            }
        }
    }
    Ok(owners)
}

/// Condensed core graph at the given radius.
pub fn core_graph(family: &[FdPerm], radius: u64) -> Result<CoreGraph> {
    let alphabet = shared_alphabet(family)?;
    let required = auto_radius(family);
    if radius < required {
        return Err(Error::RadiusTooSmall {
            given: radius,
            required,
        });
    }
    let owners = tail_owners(family, &alphabet).map_err(|c| {
        Error::Incompatible(match c {
            Certificate::SharedTail { ray, .. } => {
                format!("ray {ray} is translated by several generators")
            }
            Certificate::UncoveredTail { ray } => {
                format!("ray {ray} is not translated by any generator")
            }
            _ => unreachable!(),
        })
    })?;
    Ok(build_core_graph(family, &alphabet, &owners, radius))
}

fn build_core_graph(
    family: &[FdPerm],
    alphabet: &AlphabetSpec,
    owners: &BTreeMap<String, usize>,
    radius: u64,
) -> CoreGraph {
    let r = radius as i64;
    let mut vertices: Vec<CoreVertex> = alphabet
        .window(radius)
        .into_iter()
        .map(CoreVertex::Letter)
        .collect();
    let mut boundary = BTreeMap::new();
    for (ray, &owner) in owners {
        let d = family[owner].shift(ray).unsigned_abs();
        for end in [End::Neg, End::Pos] {
            for residue in 0..d {
                let strand = Strand {
                    ray: ray.clone(),
                    end,
                    residue,
                };
                boundary.insert(strand.clone(), vertices.len());
                vertices.push(CoreVertex::Boundary(strand));
            }
        }
    }
    let index: BTreeMap<Letter, usize> = vertices
        .iter()
        .enumerate()
        .filter_map(|(i, v)| match v {
            CoreVertex::Letter(l) => Some((l.clone(), i)),
            CoreVertex::Boundary(_) => None,
        })
        .collect();
    let vertex_of = |l: &Letter| -> usize {
        if let Some(&i) = index.get(l) {
            return i;
        }
        let (ray, i) = l
            .as_ray()
            .expect("letters outside the window are ray letters");
        let d = family[owners[ray]].shift(ray).abs();
        let strand = Strand {
            ray: ray.to_string(),
            end: if i < 0 { End::Neg } else { End::Pos },
            residue: i.rem_euclid(d) as u64,
        };
        boundary[&strand]
    };

    let mut edges = Vec::new();
    for (gi, perm) in family.iter().enumerate() {
        let deleted: BTreeSet<Letter> = perm
            .orbits()
            .finite()
            .filter(|c| c.len() > 1)
            .map(|c| c.iter().max().unwrap().clone())
            .collect();
        let mut sources = alphabet.window(radius);
        for (ray, &d) in perm.shifts() {
            let outer: Vec<i64> = if d > 0 {
                (-r - d..=-r - 1).collect()
            } else {
                (r + 1..=r - d).collect()
            };
            sources.extend(outer.into_iter().map(|i| Letter::Ray(ray.clone(), i)));
        }
        for x in sources {
            let y = perm.image(&x);
            if x == y || deleted.contains(&x) {
                continue;
            }
            let (from, to) = (vertex_of(&x), vertex_of(&y));
            if from == to {
                continue;
            }
            edges.push(CoreEdge {
                from,
                to,
                generator: gi,
            });
        }
    }
    CoreGraph {
        radius,
        vertices,
        edges,
    }
}

/// Tree test on a core graph, producing a witness either way.
pub fn tree_certificate(graph: &CoreGraph) -> Certificate {
    let n = graph.vertices.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut forest: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (ei, e) in graph.edges.iter().enumerate() {
        let (a, b) = (find(&mut parent, e.from), find(&mut parent, e.to));
        if a == b {
            let mut cycle = forest_path(&forest, e.from, e.to);
            cycle.push(ei);
            return Certificate::Cycle { edges: cycle };
        }
        parent[a] = b;
        forest[e.from].push((e.to, ei));
        forest[e.to].push((e.from, ei));
    }
    if n > 0 {
        let root = find(&mut parent, 0);
        if let Some(unreached) = (0..n).find(|&v| find(&mut parent, v) != root) {
            return Certificate::Disconnected { unreached };
        }
    }
    Certificate::SpanningTree {
        edges: (0..graph.edges.len()).collect(),
    }
}

/// Edge indices along the unique forest path from `from` to `to`.
fn forest_path(forest: &[Vec<(usize, usize)>], from: usize, to: usize) -> Vec<usize> {
    let mut prev: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    let mut queue = VecDeque::from([from]);
    let mut seen = BTreeSet::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(w, e) in &forest[v] {
            if seen.insert(w) {
                prev.insert(w, (v, e));
                queue.push_back(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut v = to;
    while v != from {
        let (p, e) = prev[&v];
        path.push(e);
        v = p;
    }
    path.reverse();
    path
}

/// Decides whether the family is dendroid, at the automatic radius.
pub fn is_dendroid_family(family: &[FdPerm]) -> Result<DendroidVerdict> {
    is_dendroid_family_at(family, auto_radius(family))
}

/// As [`is_dendroid_family`] with an explicit radius (at least the automatic one).
pub fn is_dendroid_family_at(family: &[FdPerm], radius: u64) -> Result<DendroidVerdict> {
    let alphabet = shared_alphabet(family)?;
    let required = auto_radius(family);
    if radius < required {
        return Err(Error::RadiusTooSmall {
            given: radius,
            required,
        });
    }
    let owners = match tail_owners(family, &alphabet) {
        Ok(owners) => owners,
        Err(certificate) => {
            return Ok(DendroidVerdict {
                is_dendroid: false,
                certificate,
                graph: None,
            })
        }
    };
    let graph = build_core_graph(family, &alphabet, &owners, radius);
    let certificate = tree_certificate(&graph);
    Ok(DendroidVerdict {
        is_dendroid: matches!(certificate, Certificate::SpanningTree { .. }),
        certificate,
        graph: Some(graph),
    })
}

/// Independent check on finite alphabets: builds the whole cycle diagram
/// and tests connectivity and Euler characteristic `V - E + F = 1`.
///
/// Every edge bounds exactly one 2-cell, so the 2-cells never create second
/// homology and the diagram is contractible iff it is connected with `χ = 1`.
pub fn cycle_diagram_oracle(family: &[FdPerm]) -> Result<bool> {
    let alphabet = shared_alphabet(family)?;
    let letters = alphabet.letters().ok_or_else(|| {
        Error::Unsupported("the cycle diagram oracle needs a finite alphabet".into())
    })?;
    let at: BTreeMap<&Letter, usize> = letters.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let n = letters.len();

    let mut adjacency = vec![Vec::new(); n];
    let mut cells = 0usize;
    for perm in family {
        let images: Vec<usize> = letters
            .iter()
            .map(|x| at[&perm.apply(x).unwrap()])
            .collect();
        for (x, &y) in images.iter().enumerate() {
            adjacency[x].push(y);
            adjacency[y].push(x);
        }
        let mut visited = vec![false; n];
        for start in 0..n {
            if !visited[start] {
                cells += 1;
                let mut x = start;
                while !visited[x] {
                    visited[x] = true;
                    x = images[x];
                }
            }
        }
    }
    let edges = n * family.len();
    let euler = n as i64 - edges as i64 + cells as i64;

    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adjacency[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    Ok(euler == 1 && seen.iter().all(|&s| s))
}

/// DOT rendering of a verdict: tree edges solid in generator colors, cycle
/// witness edges bold red, the unreachable vertex boxed.
pub fn verdict_dot(verdict: &DendroidVerdict, names: &[String]) -> String {
    let mut g = DotGraph::new("core", false);
    let Some(graph) = &verdict.graph else {
        let label = verdict.describe(names);
        g.node(&label, &[("shape", "note")]);
        return g.render();
    };
    let (witness, unreached): (BTreeSet<usize>, Option<usize>) = match &verdict.certificate {
        Certificate::Cycle { edges } => (edges.iter().copied().collect(), None),
        Certificate::Disconnected { unreached } => (BTreeSet::new(), Some(*unreached)),
        _ => (BTreeSet::new(), None),
    };
    for (i, v) in graph.vertices.iter().enumerate() {
        let label = v.to_string();
        let mut attrs = Vec::new();
        if matches!(v, CoreVertex::Boundary(_)) {
            attrs.push(("shape", "doublecircle"));
        }
        if unreached == Some(i) {
            attrs.push(("shape", "box"));
            attrs.push(("color", "red"));
        }
        g.node(&label, &attrs);
    }
    for (ei, e) in graph.edges.iter().enumerate() {
        let name = names
            .get(e.generator)
            .cloned()
            .unwrap_or_else(|| format!("#{}", e.generator));
        if witness.contains(&ei) {
            g.edge(
                e.from,
                e.to,
                &[("label", &name), ("color", "red"), ("style", "bold")],
            );
        } else {
            g.edge(
                e.from,
                e.to,
                &[("label", &name), ("color", dot::color(e.generator))],
            );
        }
    }
    g.render()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::tests::{example_alphabet, g, h};
    use proptest::prelude::*;

    fn finite(n: usize) -> Arc<AlphabetSpec> {
        Arc::new(AlphabetSpec::finite((0..n).map(|i| i.to_string())).unwrap())
    }

    fn perm_from_images(alphabet: &Arc<AlphabetSpec>, images: &[usize]) -> FdPerm {
        FdPerm::new(
            alphabet.clone(),
            images
                .iter()
                .enumerate()
                .map(|(i, &j)| (Letter::fin(i.to_string()), Letter::fin(j.to_string()))),
            std::iter::empty::<(String, i64)>(),
        )
        .unwrap()
    }

    fn swap01() -> FdPerm {
        perm_from_images(&finite(2), &[1, 0])
    }

    #[test]
    fn example_family_is_dendroid() {
        let family = [g(), h()];
        let graph = core_graph(&family, auto_radius(&family)).unwrap();
        // window letters plus the two condensed tails of z
        assert_eq!(
            graph.vertices.len(),
            1 + 2 * auto_radius(&family) as usize + 1 + 2
        );
        let star = graph
            .vertices
            .iter()
            .position(|v| *v == CoreVertex::Letter(Letter::fin("*")))
            .unwrap();
        let h_edges: Vec<_> = graph.edges.iter().filter(|e| e.generator == 1).collect();
        assert_eq!(h_edges.len(), 1);
        assert!(h_edges[0].from == star || h_edges[0].to == star);
        let verdict = is_dendroid_family(&family).unwrap();
        assert!(
            verdict.is_dendroid,
            "{}",
            verdict.describe(&["g".into(), "h".into()])
        );
    }

    #[test]
    fn doubled_transposition_is_not_dendroid() {
        let family = [swap01(), swap01()];
        let graph = core_graph(&family, auto_radius(&family)).unwrap();
        assert_eq!(graph.vertices.len(), 2);
        assert_eq!(graph.edges.len(), 2);
        let verdict = is_dendroid_family(&family).unwrap();
        assert!(!verdict.is_dendroid);
        assert!(
            matches!(verdict.certificate, Certificate::Cycle { ref edges } if edges.len() == 2)
        );
        assert!(!cycle_diagram_oracle(&family).unwrap());
    }

    #[test]
    fn singleton_identity_is_dendroid() {
        let a = Arc::new(AlphabetSpec::finite(["x"]).unwrap());
        let family = [FdPerm::identity(a)];
        let graph = core_graph(&family, auto_radius(&family)).unwrap();
        assert_eq!((graph.vertices.len(), graph.edges.len()), (1, 0));
        assert!(is_dendroid_family(&family).unwrap().is_dendroid);
        assert!(cycle_diagram_oracle(&family).unwrap());
    }

    #[test]
    fn long_cycles_are_dendroid() {
        for n in 1..=8 {
            let images: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            let family = [perm_from_images(&finite(n), &images)];
            assert!(cycle_diagram_oracle(&family).unwrap());
            assert!(is_dendroid_family(&family).unwrap().is_dendroid, "n = {n}");
        }
    }

    #[test]
    fn oracle_small_cases() {
        assert!(cycle_diagram_oracle(&[swap01()]).unwrap());
        let a = finite(3);
        let t01 = perm_from_images(&a, &[1, 0, 2]);
        let t02 = perm_from_images(&a, &[2, 1, 0]);
        assert!(cycle_diagram_oracle(&[t01.clone(), t02.clone()]).unwrap());
        assert!(is_dendroid_family(&[t01, t02]).unwrap().is_dendroid);
        assert!(matches!(
            cycle_diagram_oracle(&[g(), h()]),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn radius_errors_name_the_requirement() {
        let family = [g(), h()];
        let need = auto_radius(&family);
        match core_graph(&family, need - 1) {
            Err(Error::RadiusTooSmall { required, .. }) => assert_eq!(required, need),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn tail_problems_are_reported() {
        let a = example_alphabet();
        let v = is_dendroid_family(&[g(), g()]).unwrap();
        assert_eq!(
            v.certificate,
            Certificate::SharedTail {
                ray: "z".into(),
                generators: vec![0, 1]
            }
        );
        let v = is_dendroid_family(&[h(), FdPerm::identity(a)]).unwrap();
        assert_eq!(
            v.certificate,
            Certificate::UncoveredTail { ray: "z".into() }
        );
        assert!(core_graph(&[g(), g()], 10).is_err());
    }

    #[test]
    fn empty_or_mixed_families_are_errors() {
        assert!(is_dendroid_family(&[]).is_err());
        assert!(is_dendroid_family(&[swap01(), g()]).is_err());
    }

    #[test]
    fn translation_by_two_is_disconnected() {
        let p = FdPerm::translation(
            Arc::new(AlphabetSpec::new(Vec::<String>::new(), ["z"]).unwrap()),
            "z",
            2,
        )
        .unwrap();
        let v = is_dendroid_family(&[p]).unwrap();
        assert!(matches!(v.certificate, Certificate::Disconnected { .. }));
        let one = FdPerm::translation(
            Arc::new(AlphabetSpec::new(Vec::<String>::new(), ["z"]).unwrap()),
            "z",
            1,
        )
        .unwrap();
        assert!(is_dendroid_family(&[one]).unwrap().is_dendroid);
    }

    #[test]
    fn spliced_translation_is_dendroid() {
        // z:-1 -> z:0 -> * -> z:1 -> ... covers the whole alphabet in one line
        let p = FdPerm::new(
            example_alphabet(),
            [
                (Letter::ray("z", 0), Letter::fin("*")),
                (Letter::fin("*"), Letter::ray("z", 1)),
            ],
            [("z", 1)],
        )
        .unwrap();
        assert!(
            is_dendroid_family(std::slice::from_ref(&p))
                .unwrap()
                .is_dendroid
        );
        // adding h closes a cycle * - z:0 - * through two generators
        assert!(!is_dendroid_family(&[p, h()]).unwrap().is_dendroid);
    }

    #[test]
    fn dot_marks_witness() {
        let v = is_dendroid_family(&[swap01(), swap01()]).unwrap();
        let dot = verdict_dot(&v, &["a".into(), "b".into()]);
        assert!(dot.contains("style=\"bold\""));
        let v = is_dendroid_family(&[g(), h()]).unwrap();
        let dot = verdict_dot(&v, &["g".into(), "h".into()]);
        assert!(!dot.contains("bold"));
        assert!(dot.contains("z:+inf#0"));
    }

    pub(crate) fn arb_finite_family() -> impl Strategy<Value = Vec<FdPerm>> {
        (1usize..=6, 1usize..=3).prop_flat_map(|(n, k)| {
            prop::collection::vec(Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), k).prop_map(
                move |images| {
                    let a = finite(n);
                    images
                        .iter()
                        .map(|im| perm_from_images(&a, im))
                        .collect::<Vec<_>>()
                },
            )
        })
    }

    /// Families on `* ∪ z` where generator 0 translates z by ±1 and the rest
    /// are random finite permutations of a small block.
    fn arb_infinite_family() -> impl Strategy<Value = Vec<FdPerm>> {
        (
            any::<bool>(),
            prop::collection::vec(Just((0..5usize).collect::<Vec<_>>()).prop_shuffle(), 0..3),
            0..5usize,
        )
            .prop_map(|(up, blocks, splice)| {
                let a = example_alphabet();
                let block: Vec<Letter> = a.window(2);
                let d = if up { 1 } else { -1 };
                // optionally splice * after z:splice-2 on the translated ray
                let t = if splice < 4 {
                    let at = splice as i64 - 2;
                    let (from, to) = if up { (at, at + 1) } else { (at, at - 1) };
                    FdPerm::new(
                        a.clone(),
                        [
                            (Letter::ray("z", from), Letter::fin("*")),
                            (Letter::fin("*"), Letter::ray("z", to)),
                        ],
                        [("z", d)],
                    )
                    .unwrap()
                } else {
                    FdPerm::translation(a.clone(), "z", d).unwrap()
                };
                let mut family = vec![t];
                for im in blocks {
                    family.push(
                        FdPerm::new(
                            a.clone(),
                            im.iter()
                                .enumerate()
                                .map(|(i, &j)| (block[i].clone(), block[j].clone())),
                            std::iter::empty::<(String, i64)>(),
                        )
                        .unwrap(),
                    );
                }
                family
            })
    }

    proptest! {
        #[test]
        fn agrees_with_cycle_diagram(family in arb_finite_family()) {
            let fast = is_dendroid_family(&family).unwrap();
            prop_assert_eq!(fast.is_dendroid, cycle_diagram_oracle(&family).unwrap());
        }

        #[test]
        fn verdict_is_radius_stable(family in arb_infinite_family()) {
            let base = auto_radius(&family);
            let v0 = is_dendroid_family(&family).unwrap().is_dendroid;
            for k in 1..=3 {
                prop_assert_eq!(is_dendroid_family_at(&family, base + k).unwrap().is_dendroid, v0);
            }
        }

        #[test]
        fn common_fixed_point_prevents_dendroid(n in 2usize..=6, k in 1usize..=3, seed in any::<u64>()) {
            // every generator fixes letter 0
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let a = finite(n);
            let family: Vec<FdPerm> = (0..k).map(|_| {
                let mut rest: Vec<usize> = (1..n).collect();
                rest.shuffle(&mut rng);
                let images: Vec<usize> = std::iter::once(0).chain(rest).collect();
                perm_from_images(&a, &images)
            }).collect();
            prop_assert!(!is_dendroid_family(&family).unwrap().is_dendroid);
        }
    }
}
