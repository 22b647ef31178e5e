//! Single-minded combinatorial auctions and their conflict graphs.
//!
//! Every bid becomes a vertex weighted by its value, and two bids conflict
//! when their bundles share an item. Winner determination is then a
//! maximum-weight independent set problem, and the winner set is unique
//! exactly when the conflict graph has a single α-set.
//!
//! File format, one bid per line:
//!
//! ```text
//! a <bid-id> <value> <item> [<item> ...]
//! ```
//!
//! Values are decimals or `p/q`; `#` starts a comment.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::format::{parse_weight, significant_lines};
use crate::graph::WeightedGraph;
use crate::perturbation::{compute_radius, PerturbationRadius};
use crate::solver::{enumerate_alpha_sets, Limits};
use crate::weight::Weight;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bid {
    pub id: String,
    pub value: Weight,
    pub items: BTreeSet<String>,
}

impl Bid {
    pub fn new<I, S>(id: impl Into<String>, value: Weight, items: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let id = id.into();
        let items: BTreeSet<String> = items.into_iter().map(Into::into).collect();
        if items.is_empty() {
            return Err(Error::input(format!("bid {id:?} names no items")));
        }
        Ok(Bid { id, value, items })
    }

    pub fn conflicts_with(&self, other: &Bid) -> bool {
        !self.items.is_disjoint(&other.items)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuctionInstance {
    pub bids: Vec<Bid>,
    /// Union of all bundles.
    pub items: BTreeSet<String>,
}

impl AuctionInstance {
    pub fn new(bids: Vec<Bid>) -> Result<Self> {
        let mut ids = HashSet::new();
        for bid in &bids {
            if !ids.insert(bid.id.as_str()) {
                return Err(Error::input(format!("duplicate bid id {:?}", bid.id)));
            }
            if bid.items.is_empty() {
                return Err(Error::input(format!("bid {:?} names no items", bid.id)));
            }
        }
        let items = bids.iter().flat_map(|b| b.items.iter().cloned()).collect();
        Ok(AuctionInstance { bids, items })
    }

    /// One vertex per bid (labelled by bid id), with an edge wherever two
    /// bundles overlap.
    pub fn to_conflict_graph(&self) -> Result<WeightedGraph> {
        let weights = self.bids.iter().map(|b| b.value.clone()).collect();
        let mut edges = Vec::new();
        for (u, a) in self.bids.iter().enumerate() {
            for (v, b) in self.bids.iter().enumerate().skip(u + 1) {
                if a.conflicts_with(b) {
                    edges.push((u, v));
                }
            }
        }
        WeightedGraph::new(weights, &edges)?
            .with_labels(self.bids.iter().map(|b| b.id.clone()).collect::<Vec<_>>())
    }

    /// Realizes `g` as an auction: each edge `uv` becomes an item wanted by
    /// bids `u` and `v`, and each isolated vertex gets an item of its own.
    pub fn from_graph(g: &WeightedGraph) -> Result<Self> {
        let mut bundles: Vec<Vec<String>> = vec![Vec::new(); g.n()];
        for (u, v) in g.edges() {
            let item = format!("e{u}_{v}");
            bundles[u].push(item.clone());
            bundles[v].push(item);
        }
        let bids = bundles
            .into_iter()
            .enumerate()
            .map(|(v, mut items)| {
                if items.is_empty() {
                    items.push(format!("own{v}"));
                }
                Bid::new(g.label(v), g.weight(v).clone(), items)
            })
            .collect::<Result<Vec<_>>>()?;
        AuctionInstance::new(bids)
    }
}

#[derive(Clone, Debug)]
pub struct AuctionOutcome {
    /// Winning bid ids in bid order, from the lexicographically first α-set.
    pub winners: Vec<String>,
    pub revenue: Weight,
    pub unique: bool,
    /// Every revenue-maximizing winner set; more than one means a tie.
    pub winner_sets: Vec<Vec<String>>,
    /// Stability margin of the winner set when it is unique.
    pub margin: Option<PerturbationRadius>,
}

/// Winner determination with exact tie detection.
pub fn resolve_auction(a: &AuctionInstance, limits: &Limits) -> Result<AuctionOutcome> {
    let g = a.to_conflict_graph()?;
    let family = enumerate_alpha_sets(&g, limits)?;
    let ids = |set: &crate::VertexSet| -> Vec<String> {
        set.iter().map(|v| a.bids[v].id.clone()).collect()
    };
    let first = &family.sets[0];
    for (x, y) in first.iter().flat_map(|x| first.iter().map(move |y| (x, y))) {
        assert!(
            x == y || !a.bids[x].conflicts_with(&a.bids[y]),
            "winners {} and {} share an item",
            a.bids[x].id,
            a.bids[y].id
        );
    }
    let unique = family.is_unique();
    let margin = if unique && g.n() > 0 {
        Some(compute_radius(&g, first, limits)?)
    } else {
        None
    };
    Ok(AuctionOutcome {
        winners: ids(first),
        revenue: family.alpha.clone(),
        unique,
        winner_sets: family.sets.iter().map(ids).collect(),
        margin,
    })
}

pub fn parse_auction(text: &str) -> Result<AuctionInstance> {
    let mut bids = Vec::new();
    let mut seen = HashSet::new();
    for line in significant_lines(text) {
        if line.fields[0] != "a" {
            return Err(Error::parse(
                line.number,
                format!("unknown line type {:?}", line.fields[0]),
            ));
        }
        if line.fields.len() < 4 {
            return Err(Error::parse(
                line.number,
                "expected `a <bid-id> <value> <item> [<item> ...]`",
            ));
        }
        let id = line.fields[1];
        if !seen.insert(id) {
            return Err(Error::parse(
                line.number,
                format!("duplicate bid id {id:?}"),
            ));
        }
        let value = parse_weight(line.number, line.fields[2])?;
        bids.push(Bid::new(id, value, line.fields[3..].iter().copied())?);
    }
    AuctionInstance::new(bids)
}

pub fn read_auction_file(path: impl AsRef<Path>) -> Result<AuctionInstance> {
    parse_auction(&std::fs::read_to_string(path)?)
}

pub fn write_auction(a: &AuctionInstance) -> String {
    let mut out = String::new();
    for bid in &a.bids {
        write!(out, "a {} {}", bid.id, bid.value).unwrap();
        for item in &bid.items {
            write!(out, " {item}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::counterexample;
    use crate::solver::solve_oracle;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    const PATH_AUCTION: &str = "\
# three single-minded bidders
a b1 5 x
a b2 4 x y
a b3 2 y
";

    #[test]
    fn path_auction_resolves_to_outer_bids() {
        let a = parse_auction(PATH_AUCTION).unwrap();
        let g = a.to_conflict_graph().unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(
            g.weights(),
            &[Weight::from(5), Weight::from(4), Weight::from(2)]
        );

        let out = resolve_auction(&a, &Limits::default()).unwrap();
        assert_eq!(out.winners, ["b1", "b3"]);
        assert_eq!(out.revenue, Weight::from(7));
        assert!(out.unique);
        assert!(out.margin.is_some());
    }

    #[test]
    fn trivial_conflict_graphs() {
        let one = parse_auction("a solo 3 x").unwrap();
        let g = one.to_conflict_graph().unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));

        let two = parse_auction("a p 1 x\na q 2 y").unwrap();
        assert_eq!(two.to_conflict_graph().unwrap().edge_count(), 0);
        assert_eq!(two.items.len(), 2);
    }

    #[test]
    fn identical_bids_tie() {
        let a = parse_auction("a b1 3 x\na b2 3 x").unwrap();
        let out = resolve_auction(&a, &Limits::default()).unwrap();
        assert!(!out.unique);
        assert_eq!(
            out.winner_sets,
            vec![vec!["b1".to_string()], vec!["b2".to_string()]]
        );
        assert!(out.margin.is_none());
    }

    #[test]
    fn counterexample_as_auction() {
        let a = AuctionInstance::from_graph(&counterexample()).unwrap();
        assert_eq!(a.items.len(), 5);
        let out = resolve_auction(&a, &Limits::default()).unwrap();
        assert_eq!(out.winners, ["A", "C"]);
        assert_eq!(out.revenue, Weight::from(7));
        assert!(out.unique);
        assert_eq!(
            out.margin.unwrap().epsilon,
            Weight::from_ratio(1, 6).unwrap()
        );
    }

    #[test]
    fn malformed_auctions_are_rejected() {
        assert!(parse_auction("a b1 5").is_err());
        assert!(parse_auction("a b1 -5 x").is_err());
        assert!(parse_auction("a b1 5 x\na b1 2 y").is_err());
        assert!(parse_auction("b b1 5 x").is_err());
        let dup = vec![
            Bid::new("z", Weight::one(), ["x"]).unwrap(),
            Bid::new("z", Weight::one(), ["y"]).unwrap(),
        ];
        assert!(AuctionInstance::new(dup).is_err());
        assert!(Bid::new("empty", Weight::one(), Vec::<String>::new()).is_err());
    }

    #[test]
    fn empty_auction_has_no_winners() {
        let a = parse_auction("# nothing\n").unwrap();
        let out = resolve_auction(&a, &Limits::default()).unwrap();
        assert!(out.winners.is_empty() && out.unique && out.margin.is_none());
    }

    proptest! {
        #[test]
        fn graph_auction_round_trip(g in arb_graph(8)) {
            let a = AuctionInstance::from_graph(&g).unwrap();
            let back = a.to_conflict_graph().unwrap();
            prop_assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
            prop_assert_eq!(back.weights(), g.weights());

            let reparsed = parse_auction(&write_auction(&a)).unwrap();
            prop_assert_eq!(&reparsed, &a);

            let limits = Limits::default();
            let out = resolve_auction(&a, &limits).unwrap();
            let oracle = solve_oracle(&g, &limits).unwrap();
            prop_assert_eq!(&out.revenue, &oracle.alpha);
            let labels: Vec<String> = oracle.witness.iter().map(|v| g.label(v)).collect();
            prop_assert_eq!(out.winners, labels);
        }
    }
}
