use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::graph::Graph;
use super::subset::{Subset, Universe};
use crate::enumerate;
use crate::error::{Error, Result};

/// Which tuple notion is being counted or decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProblemKind {
    /// Union of the k members is X (members drawn from the downward closure).
    Cover,
    /// Members are pairwise disjoint and their union is X.
    Partition,
    /// Members are pairwise disjoint subsets of X.
    Packing,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 3] = [ProblemKind::Cover, ProblemKind::Partition, ProblemKind::Packing];

    pub fn name(self) -> &'static str {
        match self {
            ProblemKind::Cover => "cover",
            ProblemKind::Partition => "partition",
            ProblemKind::Packing => "packing",
        }
    }

    /// Whether X admits the empty tuple.
    #[inline]
    pub fn zero_tuple_ok(self, x: Subset) -> bool {
        match self {
            ProblemKind::Packing => true,
            ProblemKind::Cover | ProblemKind::Partition => x.is_empty(),
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl std::str::FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cover" => Ok(ProblemKind::Cover),
            "partition" => Ok(ProblemKind::Partition),
            "packing" => Ok(ProblemKind::Packing),
            other => Err(Error::Precondition(format!("unknown problem kind `{other}`"))),
        }
    }
}

/// A list of subsets of a universe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExplicitSystem {
    universe: Universe,
    sets: Vec<Subset>,
}

#[derive(Serialize, Deserialize)]
struct SystemJson {
    n: usize,
    sets: Vec<Vec<usize>>,
}

impl ExplicitSystem {
    /// Rejects sets outside the universe and duplicate sets.
    pub fn new(universe: Universe, sets: Vec<Subset>) -> Result<ExplicitSystem> {
        let mut seen = HashSet::with_capacity(sets.len());
        for &s in &sets {
            universe.check(s)?;
            if !seen.insert(s) {
                return Err(Error::InvalidSystem(format!("duplicate set {s:?}")));
            }
        }
        Ok(ExplicitSystem { universe, sets })
    }

    /// Like [`ExplicitSystem::new`] but keeps repeated sets; each position is its own label
    /// (closed neighborhoods of twin vertices coincide).
    pub fn labeled(universe: Universe, sets: Vec<Subset>) -> Result<ExplicitSystem> {
        for &s in &sets {
            universe.check(s)?;
        }
        Ok(ExplicitSystem { universe, sets })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn n(&self) -> usize {
        self.universe.n()
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn union(&self) -> Subset {
        self.sets.iter().fold(Subset::EMPTY, |a, &s| a.union(s))
    }

    /// Parses `{"n": int, "sets": [[int, ...], ...]}` with 0-indexed elements.
    pub fn from_json(text: &str) -> Result<ExplicitSystem> {
        let raw: SystemJson = serde_json::from_str(text)?;
        let universe = Universe::new(raw.n)?;
        let mut sets = Vec::with_capacity(raw.sets.len());
        for elems in raw.sets {
            if let Some(&bad) = elems.iter().find(|&&e| e >= raw.n) {
                return Err(Error::InvalidSystem(format!("element {bad} outside universe of {}", raw.n)));
            }
            sets.push(Subset::from_elements(elems));
        }
        ExplicitSystem::new(universe, sets)
    }

    pub fn to_json(&self) -> String {
        let raw = SystemJson {
            n: self.n(),
            sets: self.sets.iter().map(|s| s.to_vec()).collect(),
        };
        serde_json::to_string(&raw).expect("plain data serializes")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    IndependentSetsOfGraph,
    ExplicitList,
    ClosedNeighborhoodSystem,
    DominatingSetsOfGraph,
    Custom,
}

type Predicate = Arc<dyn Fn(Subset) -> bool + Send + Sync>;

#[derive(Clone)]
enum Repr {
    Independent(Graph),
    Dominating(Graph),
    Explicit {
        system: ExplicitSystem,
        members: HashSet<Subset>,
    },
    Custom {
        member: Predicate,
        member_down: Predicate,
    },
}

/// A set family given by membership oracles for F and for its downward closure.
#[derive(Clone)]
pub struct ImplicitFamily {
    universe: Universe,
    kind: FamilyKind,
    repr: Repr,
}

impl fmt::Debug for ImplicitFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ImplicitFamily")
            .field("n", &self.universe.n())
            .field("kind", &self.kind)
            .finish()
    }
}

/// The independent sets of `g`.
pub fn independent_family(g: &Graph) -> ImplicitFamily {
    ImplicitFamily {
        universe: Universe::new(g.n()).expect("graph size already checked"),
        kind: FamilyKind::IndependentSetsOfGraph,
        repr: Repr::Independent(g.clone()),
    }
}

/// The dominating sets of `g` (upward closed, so F↓ is every subset of V).
pub fn dominating_family(g: &Graph) -> ImplicitFamily {
    ImplicitFamily {
        universe: Universe::new(g.n()).expect("graph size already checked"),
        kind: FamilyKind::DominatingSetsOfGraph,
        repr: Repr::Dominating(g.clone()),
    }
}

pub fn explicit_family(system: &ExplicitSystem) -> ImplicitFamily {
    ImplicitFamily {
        universe: system.universe().clone(),
        kind: FamilyKind::ExplicitList,
        repr: Repr::Explicit {
            members: system.sets().iter().copied().collect(),
            system: system.clone(),
        },
    }
}

/// One closed neighborhood N[v] for every v in `x`, over the universe V.
pub fn neighborhood_system(g: &Graph, x: Subset) -> Result<ExplicitSystem> {
    if !x.is_subset_of(g.vertices()) {
        return Err(Error::OutOfUniverse { mask: x.0, n: g.n() });
    }
    let sets = x.iter().map(|v| g.closed_neighbors(v)).collect();
    ExplicitSystem::labeled(Universe::new(g.n())?, sets)
}

impl ImplicitFamily {
    /// Family from two predicates. `member_down` must be downward closed and contain `member`.
    pub fn custom<F, D>(universe: Universe, member: F, member_down: D) -> ImplicitFamily
    where
        F: Fn(Subset) -> bool + Send + Sync + 'static,
        D: Fn(Subset) -> bool + Send + Sync + 'static,
    {
        ImplicitFamily {
            universe,
            kind: FamilyKind::Custom,
            repr: Repr::Custom {
                member: Arc::new(member),
                member_down: Arc::new(member_down),
            },
        }
    }

    /// Explicit family tagged as a closed-neighborhood system.
    pub fn closed_neighborhoods(g: &Graph, x: Subset) -> Result<ImplicitFamily> {
        let system = neighborhood_system(g, x)?;
        let mut fam = explicit_family(&system);
        fam.kind = FamilyKind::ClosedNeighborhoodSystem;
        Ok(fam)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn n(&self) -> usize {
        self.universe.n()
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn graph(&self) -> Option<&Graph> {
        match &self.repr {
            Repr::Independent(g) | Repr::Dominating(g) => Some(g),
            _ => None,
        }
    }

    /// S ∈ F.
    pub fn member(&self, s: Subset) -> bool {
        if !self.universe.contains(s) {
            return false;
        }
        match &self.repr {
            Repr::Independent(g) => g.is_independent(s),
            Repr::Dominating(g) => g.is_dominating(s),
            Repr::Explicit { members, .. } => members.contains(&s),
            Repr::Custom { member, .. } => member(s),
        }
    }

    /// S ∈ F↓.
    pub fn member_down(&self, s: Subset) -> bool {
        if !self.universe.contains(s) {
            return false;
        }
        match &self.repr {
            Repr::Independent(g) => g.is_independent(s),
            Repr::Dominating(_) => true,
            Repr::Explicit { system, .. } => system.sets().iter().any(|&t| s.is_subset_of(t)),
            Repr::Custom { member_down, .. } => member_down(s),
        }
    }

    /// Membership in the family the given problem kind draws from.
    pub fn member_for(&self, kind: ProblemKind, s: Subset) -> bool {
        match kind {
            ProblemKind::Cover => self.member_down(s),
            ProblemKind::Partition | ProblemKind::Packing => self.member(s),
        }
    }

    /// Candidate first members e(X) for the divide-and-conquer solvers: whenever a tuple of
    /// the given kind for some Y ⊇ X uses only sets inside X or outside X, an equivalent tuple
    /// exists whose first member inside X is one of the visited sets.
    ///
    /// Independent sets: maximal independent sets of G[X]. Dominating sets: minimal
    /// dominating sets of G inside X. Explicit and custom families: maximal members of the
    /// restriction for covers, every member of the restriction otherwise.
    ///
    /// Returns the number of enumerator leaves explored.
    pub fn candidates(&self, kind: ProblemKind, x: Subset, visit: &mut dyn FnMut(Subset)) -> u64 {
        match &self.repr {
            Repr::Independent(g) => enumerate::enum_mis(g, x, &mut *visit).leaves_visited,
            Repr::Dominating(g) => enumerate::enum_min_dom_in(g, x, &mut *visit).leaves_visited,
            Repr::Explicit { system, .. } => match kind {
                ProblemKind::Cover => {
                    let restricted: Vec<Subset> = system.sets().iter().map(|s| s.intersection(x)).collect();
                    emit_maximal(&restricted, visit);
                    system.len() as u64
                }
                ProblemKind::Partition | ProblemKind::Packing => {
                    for &s in system.sets() {
                        if s.is_subset_of(x) {
                            visit(s);
                        }
                    }
                    system.len() as u64
                }
            },
            Repr::Custom { .. } => {
                let mut leaves = 0u64;
                let members: Vec<Subset> = x
                    .subsets()
                    .inspect(|_| leaves += 1)
                    .filter(|&s| self.member_for(kind, s))
                    .collect();
                match kind {
                    ProblemKind::Cover => emit_maximal(&members, visit),
                    _ => members.into_iter().for_each(visit),
                }
                leaves
            }
        }
    }
}

fn emit_maximal(sets: &[Subset], visit: &mut dyn FnMut(Subset)) {
    let mut seen = HashSet::new();
    for (i, &s) in sets.iter().enumerate() {
        let dominated = sets
            .iter()
            .enumerate()
            .any(|(j, &t)| j != i && s != t && s.is_subset_of(t));
        if !dominated && seen.insert(s) {
            visit(s);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::complete(3).unwrap()
    }

    #[test]
    fn independent_family_basics() {
        let fam = independent_family(&triangle());
        assert!(!fam.member(Subset::from_elements([0, 1])));
        assert!(fam.member(Subset::EMPTY));
        assert!(fam.member(Subset::singleton(2)));
        assert!(fam.member_down(Subset::singleton(2)));
    }

    #[test]
    fn neighborhood_system_examples() {
        let k3 = neighborhood_system(&triangle(), Subset::full(3)).unwrap();
        assert_eq!(k3.len(), 3);
        assert!(k3.sets().iter().all(|&s| s == Subset::full(3)));

        let star = Graph::star(3).unwrap();
        let sys = neighborhood_system(&star, Subset::singleton(0)).unwrap();
        assert_eq!(sys.sets(), &[Subset::full(4)]);

        let p = neighborhood_system(&Graph::petersen(), Subset::full(10)).unwrap();
        assert_eq!(p.len(), 10);
        assert!(p.sets().iter().all(|s| s.len() == 4));

        let empty = neighborhood_system(&triangle(), Subset::EMPTY).unwrap();
        assert!(empty.is_empty());
    }

    #[test]
    fn explicit_json_roundtrip_and_validation() {
        let sys = ExplicitSystem::from_json(r#"{"n": 3, "sets": [[0, 1], [2], []]}"#).unwrap();
        assert_eq!(sys.len(), 3);
        assert_eq!(ExplicitSystem::from_json(&sys.to_json()).unwrap(), sys);
        assert!(ExplicitSystem::from_json(r#"{"n": 2, "sets": [[0], [0]]}"#).is_err());
        assert!(ExplicitSystem::from_json(r#"{"n": 2, "sets": [[5]]}"#).is_err());
    }

    #[test]
    fn explicit_downward_closure() {
        let sys = ExplicitSystem::new(Universe::new(4).unwrap(), vec![Subset::from_elements([0, 1, 2])]).unwrap();
        let fam = explicit_family(&sys);
        assert!(fam.member_down(Subset::from_elements([0, 2])));
        assert!(!fam.member(Subset::from_elements([0, 2])));
        assert!(fam.member_down(Subset::EMPTY));
        assert!(!fam.member_down(Subset::singleton(3)));
    }

    #[test]
    fn explicit_cover_candidates_are_maximal_restrictions() {
        let sys = ExplicitSystem::new(
            Universe::new(4).unwrap(),
            vec![Subset::from_elements([0, 1]), Subset::from_elements([1, 2, 3]), Subset::singleton(3)],
        )
        .unwrap();
        let fam = explicit_family(&sys);
        let mut got = Vec::new();
        fam.candidates(ProblemKind::Cover, Subset::from_elements([0, 1, 3]), &mut |s| got.push(s));
        got.sort();
        assert_eq!(got, vec![Subset::from_elements([0, 1]), Subset::from_elements([1, 3])]);
    }
}
