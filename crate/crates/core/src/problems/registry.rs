use std::fmt;

use crate::error::{Error, Result};
use crate::reps::Interpretation;

/// Which construction of representatives the problem admits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Case {
    /// Preserved under merge.
    A,
    /// Lower-bound parameter, preserved under separate and add-leaf, with the
    /// leaf property.
    B,
    /// Preserved under separate, add-leaf, edge- and vertex-deletion.
    C,
    /// Upper-bound parameter, preserved under separate and add-leaf, leaf
    /// property for a constant function.
    SpecialMinCut,
    /// Case A with the relaxed upper-bound condition: positive for some
    /// `k >= |G|` implies positive at `k = |G|`.
    SpecialConnectedA,
    /// Red-blue problem preserved under color-preserving merge.
    RedBlueA,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamRole {
    LowerBound,
    UpperBound,
    NotParticipating,
}

/// The leaf function `f` of case B and the special cut case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Leaf {
    Identity,
    Constant(usize),
}

impl Leaf {
    pub fn apply(self, k: usize) -> usize {
        match self {
            Leaf::Identity => k,
            Leaf::Constant(c) => c,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Support {
    Supported,
    NotSupported(&'static str),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProblemKind {
    Connectedness,
    ConnectedVertexCover,
    ConnectedDominatingSet,
    Diameter,
    DominatingSet,
    Emptiness,
    PartitionIntoConnectedComponents,
    VertexCover,
    Radius,
    RDominatingSet(usize),
    NearlyConnected,
    AcyclicInducedSubgraph,
    AcyclicSubgraph,
    BipartiteInducedSubgraph,
    BipartiteSubgraph,
    IndependentSet,
    IrredundantSet,
    MaxCut,
    Nonblocker,
    SmallVertexDegree,
    Bipartiteness,
    Coloring,
    EdgeBipartization,
    FeedbackEdgeSet,
    FeedbackVertexSet,
    Forest,
    FixedColoring(usize),
    OddCycleTransversal,
    PartitionIntoForests,
    MonochromaticTriangle,
    MinCut,
    RedBlueDominatingSet,
    HittingSet,
    SetCover,
    LargeVertexDegree,
    Tree,
    PathCover(usize),
    MaxLeafSpanningTree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProblemSpec {
    pub name: &'static str,
    pub title: &'static str,
    pub kind: ProblemKind,
    pub case: Option<Case>,
    pub role: ParamRole,
    pub leaf: Option<Leaf>,
    pub support: Support,
}

impl ProblemSpec {
    pub fn is_supported(&self) -> bool {
        self.support == Support::Supported
    }

    pub fn interpretation(&self) -> Interpretation {
        if self.case == Some(Case::RedBlueA) {
            Interpretation::RedBlue
        } else {
            Interpretation::Simple
        }
    }

    /// The problem's case, or an error naming why it is unsupported.
    pub fn require_supported(&self) -> Result<Case> {
        match (self.support, self.case) {
            (Support::Supported, Some(case)) => Ok(case),
            (Support::NotSupported(reason), _) => {
                Err(Error::Unsupported { name: self.name.into(), reason: reason.into() })
            }
            (Support::Supported, None) => Err(Error::Invariant(format!("{} has no case", self.name))),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::A => "A",
            Case::B => "B",
            Case::C => "C",
            Case::SpecialMinCut => "special-mincut",
            Case::SpecialConnectedA => "special-connected-a",
            Case::RedBlueA => "red-blue-a",
        };
        f.write_str(s)
    }
}

impl fmt::Display for ParamRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParamRole::LowerBound => "lower-bound",
            ParamRole::UpperBound => "upper-bound",
            ParamRole::NotParticipating => "not-participating",
        })
    }
}

const fn spec(
    name: &'static str,
    title: &'static str,
    kind: ProblemKind,
    case: Case,
    role: ParamRole,
    leaf: Option<Leaf>,
) -> ProblemSpec {
    ProblemSpec { name, title, kind, case: Some(case), role, leaf, support: Support::Supported }
}

const fn unsupported(name: &'static str, title: &'static str, kind: ProblemKind, reason: &'static str) -> ProblemSpec {
    ProblemSpec { name, title, kind, case: None, role: ParamRole::NotParticipating, leaf: None, support: Support::NotSupported(reason) }
}

use Case::*;
use ParamRole::*;
use ProblemKind as K;

const ID: Option<Leaf> = Some(Leaf::Identity);

static REGISTRY: &[ProblemSpec] = &[
    spec("connectedness", "Connectedness", K::Connectedness, A, NotParticipating, None),
    spec("connected-vertex-cover", "Connected Vertex Cover", K::ConnectedVertexCover, SpecialConnectedA, UpperBound, None),
    spec("connected-dominating-set", "Connected Dominating Set", K::ConnectedDominatingSet, SpecialConnectedA, UpperBound, None),
    spec("diameter", "Diameter", K::Diameter, A, UpperBound, None),
    spec("dominating-set", "Dominating Set", K::DominatingSet, A, UpperBound, None),
    spec("emptiness", "Emptiness", K::Emptiness, A, NotParticipating, None),
    spec("partition-into-connected-components", "Partition Into Connected Components", K::PartitionIntoConnectedComponents, A, UpperBound, None),
    spec("vertex-cover", "Vertex Cover", K::VertexCover, A, UpperBound, None),
    spec("radius", "Radius", K::Radius, A, UpperBound, None),
    spec("2-dominating-set", "r-Dominating Set (r = 2)", K::RDominatingSet(2), A, UpperBound, None),
    spec("nearly-connected", "Nearly Connected", K::NearlyConnected, A, UpperBound, None),
    spec("acyclic-induced-subgraph", "Acyclic Induced Subgraph", K::AcyclicInducedSubgraph, B, LowerBound, ID),
    spec("acyclic-subgraph", "Acyclic Subgraph", K::AcyclicSubgraph, B, LowerBound, ID),
    spec("bipartite-induced-subgraph", "Bipartite Induced Subgraph", K::BipartiteInducedSubgraph, B, LowerBound, ID),
    spec("bipartite-subgraph", "Bipartite Subgraph", K::BipartiteSubgraph, B, LowerBound, ID),
    spec("independent-set", "Independent Set", K::IndependentSet, B, LowerBound, ID),
    spec("irredundant-set", "Irredundant Set", K::IrredundantSet, B, LowerBound, ID),
    spec("maxcut", "MaxCut", K::MaxCut, B, LowerBound, ID),
    spec("nonblocker", "Nonblocker", K::Nonblocker, B, LowerBound, ID),
    spec("small-vertex-degree", "Small Vertex Degree", K::SmallVertexDegree, SpecialMinCut, UpperBound, Some(Leaf::Constant(1))),
    spec("bipartiteness", "Bipartiteness", K::Bipartiteness, C, NotParticipating, None),
    spec("coloring", "Coloring", K::Coloring, C, UpperBound, None),
    spec("edge-bipartization", "Edge Bipartization", K::EdgeBipartization, C, UpperBound, None),
    spec("feedback-edge-set", "Feedback Edge Set", K::FeedbackEdgeSet, C, UpperBound, None),
    spec("feedback-vertex-set", "Feedback Vertex Set", K::FeedbackVertexSet, C, UpperBound, None),
    spec("forest", "Forest", K::Forest, C, NotParticipating, None),
    spec("2-coloring", "2-Coloring", K::FixedColoring(2), C, NotParticipating, None),
    spec("3-coloring", "3-Coloring", K::FixedColoring(3), C, NotParticipating, None),
    spec("4-coloring", "4-Coloring", K::FixedColoring(4), C, NotParticipating, None),
    spec("odd-cycle-transversal", "Odd Cycle Transversal", K::OddCycleTransversal, C, UpperBound, None),
    spec("partition-into-forests", "Partition Into Forests", K::PartitionIntoForests, C, UpperBound, None),
    spec("monochromatic-triangle", "Monochromatic Triangle", K::MonochromaticTriangle, C, NotParticipating, None),
    spec("mincut", "MinCut", K::MinCut, SpecialMinCut, UpperBound, Some(Leaf::Constant(1))),
    spec("rbds", "Red-Blue Dominating Set", K::RedBlueDominatingSet, RedBlueA, UpperBound, None),
    spec("hitting-set", "Hitting Set", K::HittingSet, RedBlueA, UpperBound, None),
    spec("set-cover", "Set Cover", K::SetCover, RedBlueA, UpperBound, None),
    unsupported(
        "large-vertex-degree",
        "Large Vertex Degree",
        K::LargeVertexDegree,
        "the property is preserved neither under merge nor under separate; decidability is open",
    ),
    unsupported(
        "tree",
        "Tree",
        K::Tree,
        "neither merge nor separate preserves being a tree",
    ),
    unsupported(
        "3-path-cover",
        "l-Path Cover (l = 3)",
        K::PathCover(3),
        "merging vertices and adding leaves can create longer paths; only l = 2 (vertex cover) is covered",
    ),
    unsupported(
        "max-leaf-spanning-tree",
        "Max-Leaf Spanning Tree",
        K::MaxLeafSpanningTree,
        "the problem does not seem amenable to merge or separate arguments",
    ),
];

pub fn registry() -> &'static [ProblemSpec] {
    REGISTRY
}

pub fn lookup(name: &str) -> Result<&'static ProblemSpec> {
    REGISTRY.iter().find(|p| p.name == name).ok_or_else(|| Error::UnknownProblem(name.into()))
}
