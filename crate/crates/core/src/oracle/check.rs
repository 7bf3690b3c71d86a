use std::fmt;

use super::graph::{build_graph, WarehouseGraph};
use crate::model::{Distance, Instance, Point};
use crate::tour::{Edge, Side, TourSubgraph};

/// Outcome of [`check_tour_subgraph`]; carries the first violation found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    /// Edge outside the warehouse geometry or with multiplicity outside `{1, 2}`.
    InvalidEdge(Edge),
    LengthMismatch {
        recorded: Distance,
        actual: Distance,
    },
    /// A required point with degree zero.
    Uncovered(Point),
    OddDegree(Point),
    Disconnected,
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Valid => f.write_str("valid"),
            Verdict::InvalidEdge(e) => write!(f, "invalid edge {e:?}"),
            Verdict::LengthMismatch { recorded, actual } => {
                write!(f, "length mismatch: recorded {recorded}, edges sum to {actual}")
            }
            Verdict::Uncovered(p) => write!(f, "uncovered item at {p}"),
            Verdict::OddDegree(p) => write!(f, "odd degree at {p}"),
            Verdict::Disconnected => f.write_str("disconnected"),
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Elementary graph edges covered by `edge`, or `None` if it does not fit the
/// geometry.
fn elementary(g: &WarehouseGraph, inst: &Instance, edge: Edge) -> Option<Vec<(usize, usize)>> {
    match edge {
        Edge::Aisle { aisle, lo, hi } => {
            if aisle == 0 || aisle > inst.num_aisles || lo >= hi || hi > inst.aisle_length {
                return None;
            }
            g.vertex(Point::new(aisle, lo))?;
            g.vertex(Point::new(aisle, hi))?;
            let ids: Vec<usize> = g
                .vertices
                .iter()
                .enumerate()
                .filter(|(_, p)| p.aisle == aisle && p.offset >= lo && p.offset <= hi)
                .map(|(i, _)| i)
                .collect();
            Some(ids.windows(2).map(|w| (w[0], w[1])).collect())
        }
        Edge::Cross { side, left } => {
            if left == 0 || left >= inst.num_aisles {
                return None;
            }
            let y = match side {
                Side::Top => inst.aisle_length,
                Side::Bottom => 0,
            };
            Some(vec![(
                g.vertex(Point::new(left, y))?,
                g.vertex(Point::new(left + 1, y))?,
            )])
        }
    }
}

/// True iff `sub` is a tour subgraph of `inst`: every required point has
/// positive degree, every degree is even and the edges form one connected
/// piece. The empty subgraph is a tour only when nothing but the depot needs
/// visiting.
pub fn check_tour_subgraph(inst: &Instance, sub: &TourSubgraph) -> Verdict {
    let g = build_graph(inst);
    let mut degree = vec![0u32; g.num_vertices()];
    let mut parent: Vec<usize> = (0..g.num_vertices()).collect();
    let mut actual = 0;

    for (&edge, &mult) in &sub.edge_multiset {
        if !(1..=2).contains(&mult) {
            return Verdict::InvalidEdge(edge);
        }
        let Some(parts) = elementary(&g, inst, edge) else {
            return Verdict::InvalidEdge(edge);
        };
        actual += mult as Distance * edge.length(inst);
        for (u, v) in parts {
            degree[u] += mult as u32;
            degree[v] += mult as u32;
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            parent[ru] = rv;
        }
    }
    if actual != sub.total_length {
        return Verdict::LengthMismatch {
            recorded: sub.total_length,
            actual,
        };
    }

    let required = inst.required_points();
    if sub.edge_multiset.is_empty() {
        return match required.iter().find(|&&p| p != inst.depot()) {
            Some(&p) => Verdict::Uncovered(p),
            None => Verdict::Valid,
        };
    }
    for p in required {
        let v = g.vertex(p).expect("required point is a vertex");
        if degree[v] == 0 {
            return Verdict::Uncovered(p);
        }
    }
    if let Some(v) = (0..g.num_vertices()).find(|&v| degree[v] % 2 == 1) {
        return Verdict::OddDegree(g.vertices[v]);
    }
    let mut roots = (0..g.num_vertices())
        .filter(|&v| degree[v] > 0)
        .map(|v| find(&mut parent, v));
    let first = roots.next();
    if roots.any(|r| Some(r) != first) {
        return Verdict::Disconnected;
    }
    Verdict::Valid
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dp::{HorizontalConfig as H, VerticalConfig as V};
    use crate::fixtures;

    #[test]
    fn empty_subgraph_without_items() {
        let inst = fixtures::empty_three_aisles();
        assert_eq!(check_tour_subgraph(&inst, &TourSubgraph::default()), Verdict::Valid);
    }

    #[test]
    fn uncovered_item() {
        let inst = fixtures::two_aisle();
        // Aisle 2 only partly walked: the item at offset 7 is missed.
        let mut sub = TourSubgraph::from_configs(&inst, &[V::OnePass, V::OnePass], &[H::OneOne]);
        sub.edge_multiset.remove(&Edge::Aisle {
            aisle: 2,
            lo: 7,
            hi: 10,
        });
        sub.edge_multiset.remove(&Edge::Aisle { aisle: 2, lo: 0, hi: 7 });
        sub.total_length = sub.edge_length(&inst);
        let verdict = check_tour_subgraph(&inst, &sub);
        assert_eq!(verdict, Verdict::Uncovered(Point::new(2, 7)));
        assert!(verdict.to_string().contains("uncovered item"));
    }

    #[test]
    fn single_pass_without_return() {
        let mut inst = fixtures::two_aisle();
        inst.items.retain(|i| i.aisle == 1);
        let sub = TourSubgraph::from_configs(&inst, &[V::OnePass, V::Skip], &[H::ZeroZero]);
        assert!(matches!(check_tour_subgraph(&inst, &sub), Verdict::OddDegree(_)));
    }

    #[test]
    fn two_separate_loops() {
        let mut inst = fixtures::two_aisle();
        inst.top_cross = vec![3];
        let sub = TourSubgraph::from_configs(&inst, &[V::Bottom, V::Bottom], &[H::ZeroZero]);
        assert_eq!(check_tour_subgraph(&inst, &sub), Verdict::Disconnected);
    }

    #[test]
    fn geometry_and_length_are_checked() {
        let inst = fixtures::two_aisle();
        let mut sub = TourSubgraph::default();
        sub.edge_multiset.insert(
            Edge::Cross {
                side: Side::Top,
                left: 2,
            },
            1,
        );
        assert!(matches!(check_tour_subgraph(&inst, &sub), Verdict::InvalidEdge(_)));

        let mut sub = TourSubgraph::from_configs(&inst, &[V::OnePass, V::OnePass], &[H::OneOne]);
        assert_eq!(check_tour_subgraph(&inst, &sub), Verdict::Valid);
        sub.total_length += 1;
        assert!(matches!(
            check_tour_subgraph(&inst, &sub),
            Verdict::LengthMismatch { .. }
        ));
    }

    #[test]
    fn coarse_segments_are_refined() {
        // One segment spanning the item is as good as two.
        let inst = fixtures::single_aisle();
        let mut sub = TourSubgraph::default();
        sub.edge_multiset.insert(Edge::Aisle { aisle: 1, lo: 0, hi: 5 }, 2);
        sub.total_length = 10;
        assert_eq!(check_tour_subgraph(&inst, &sub), Verdict::Valid);
    }
}
