//! Tour subgraphs and their closed walks.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::dp::{HorizontalConfig, VerticalConfig};
use crate::model::{Distance, Instance, Point};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Top,
    Bottom,
}

/// An edge of the warehouse graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Edge {
    /// Vertical segment of `aisle` between offsets `lo < hi`.
    Aisle { aisle: usize, lo: Distance, hi: Distance },
    /// Cross segment between aisles `left` and `left + 1`.
    Cross { side: Side, left: usize },
}

impl Edge {
    pub fn endpoints(&self, inst: &Instance) -> (Point, Point) {
        match *self {
            Edge::Aisle { aisle, lo, hi } => (Point::new(aisle, lo), Point::new(aisle, hi)),
            Edge::Cross { side, left } => {
                let y = match side {
                    Side::Top => inst.aisle_length,
                    Side::Bottom => 0,
                };
                (Point::new(left, y), Point::new(left + 1, y))
            }
        }
    }

    pub fn length(&self, inst: &Instance) -> Distance {
        match *self {
            Edge::Aisle { lo, hi, .. } => hi - lo,
            Edge::Cross { side: Side::Top, left } => inst.top_gap(left),
            Edge::Cross {
                side: Side::Bottom,
                left,
            } => inst.bottom_gap(left),
        }
    }
}

/// Edge multiset whose edges can be walked as one closed tour, along with the
/// per-aisle and per-gap configurations that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TourSubgraph {
    pub vertical_configs: Vec<VerticalConfig>,
    /// `22*` is recorded as `22`; the matching aisle shows `2pass`.
    pub horizontal_configs: Vec<HorizontalConfig>,
    pub edge_multiset: BTreeMap<Edge, u8>,
    pub total_length: Distance,
}

impl TourSubgraph {
    /// Materializes the edges of the given configurations. Aisles are split at
    /// every visit offset. A top, bottom or gap configuration that produces no
    /// edges is recorded as `none`.
    pub fn from_configs(inst: &Instance, verticals: &[VerticalConfig], horizontals: &[HorizontalConfig]) -> Self {
        let l = inst.aisle_length;
        let n = verticals.len();

        // Visits grouped by aisle with a counting sort.
        let mut start = vec![0usize; n + 2];
        let visits = inst
            .items
            .iter()
            .map(|i| (i.aisle, i.offset))
            .chain(std::iter::once((inst.depot_aisle, 0)))
            .filter(|&(a, _)| a <= n);
        for (a, _) in visits.clone() {
            start[a + 1] += 1;
        }
        for j in 1..start.len() {
            start[j] += start[j - 1];
        }
        let mut fill = start.clone();
        let mut grouped = vec![0; start[n + 1]];
        for (a, y) in visits {
            grouped[fill[a]] = y;
            fill[a] += 1;
        }

        // Generated in `Edge` order, so the map below is built without rebalancing.
        let mut edges: Vec<(Edge, u8)> = Vec::with_capacity(2 * grouped.len() + 2 * n);
        let mut vertical_configs = Vec::with_capacity(n);
        let mut stops = Vec::new();
        for (idx, &cfg) in verticals.iter().enumerate() {
            let aisle = idx + 1;
            let here = &mut grouped[start[aisle]..start[aisle + 1]];
            here.sort_unstable();
            let (lo_visit, hi_visit) = (here.first().copied(), here.last().copied());
            stops.clear();
            stops.push(0);
            stops.extend_from_slice(here);
            stops.push(l);
            stops.dedup();
            // Bottommost largest gap between consecutive stops.
            let gap_at = stops
                .windows(2)
                .enumerate()
                .fold(
                    (0, 0),
                    |best, (i, w)| if w[1] - w[0] > best.1 { (i, w[1] - w[0]) } else { best },
                )
                .0;
            let before = edges.len();
            for (i, w) in stops.windows(2).enumerate() {
                let (lo, hi) = (w[0], w[1]);
                let mult = match cfg {
                    VerticalConfig::OnePass => 1,
                    VerticalConfig::TwoPass => 2,
                    VerticalConfig::Top if lo_visit.is_some_and(|v| lo >= v) => 2,
                    VerticalConfig::Bottom if hi_visit.is_some_and(|v| hi <= v) => 2,
                    VerticalConfig::Gap if lo_visit.is_some() && i != gap_at => 2,
                    _ => 0,
                };
                if mult > 0 {
                    edges.push((Edge::Aisle { aisle, lo, hi }, mult));
                }
            }
            let produced = edges.len() > before;
            vertical_configs.push(match cfg {
                VerticalConfig::Top | VerticalConfig::Bottom | VerticalConfig::Gap if !produced => VerticalConfig::Skip,
                other => other,
            });
        }

        let horizontal_configs: Vec<HorizontalConfig> = horizontals.iter().map(|h| h.edges_only()).collect();
        for side in [Side::Top, Side::Bottom] {
            for (idx, cfg) in horizontal_configs.iter().enumerate() {
                let (t, b) = cfg.edge_counts();
                let mult = if side == Side::Top { t } else { b };
                if mult > 0 {
                    edges.push((Edge::Cross { side, left: idx + 1 }, mult));
                }
            }
        }

        let total_length = edges.iter().map(|(e, m)| *m as Distance * e.length(inst)).sum();
        Self {
            vertical_configs,
            horizontal_configs,
            edge_multiset: edges.into_iter().collect(),
            total_length,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.edge_multiset.is_empty()
    }

    /// Sum of multiplicity times length, recomputed from the instance.
    pub fn edge_length(&self, inst: &Instance) -> Distance {
        self.edge_multiset
            .iter()
            .map(|(e, &m)| m as Distance * e.length(inst))
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("depot {0} is not on the tour subgraph")]
    DepotNotOnTour(Point),
    #[error("vertex {0} has odd degree")]
    OddDegree(Point),
    #[error("tour subgraph is disconnected")]
    Disconnected,
}

/// A closed walk: `points[i]` to `points[i + 1]` uses `edges[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerWalk {
    pub points: Vec<Point>,
    pub edges: Vec<Edge>,
}

impl EulerWalk {
    pub fn length(&self, inst: &Instance) -> Distance {
        self.edges.iter().map(|e| e.length(inst)).sum()
    }
}

/// Hierholzer's algorithm from the depot. Every edge is used as many times as
/// its multiplicity.
pub fn euler_walk(sub: &TourSubgraph, inst: &Instance) -> Result<EulerWalk, WalkError> {
    let depot = inst.depot();
    if sub.is_empty() {
        return Ok(EulerWalk {
            points: vec![depot],
            edges: Vec::new(),
        });
    }

    let mut ids: BTreeMap<Point, usize> = BTreeMap::new();
    let mut points = Vec::new();
    let mut id = |p: Point, points: &mut Vec<Point>| {
        *ids.entry(p).or_insert_with(|| {
            points.push(p);
            points.len() - 1
        })
    };
    // (u, v, edge) per copy.
    let mut copies = Vec::new();
    for (&edge, &mult) in &sub.edge_multiset {
        let (p, q) = edge.endpoints(inst);
        let (u, v) = (id(p, &mut points), id(q, &mut points));
        for _ in 0..mult {
            copies.push((u, v, edge));
        }
    }
    let mut adj = vec![Vec::new(); points.len()];
    for (k, &(u, v, _)) in copies.iter().enumerate() {
        adj[u].push(k);
        adj[v].push(k);
    }
    if let Some(u) = (0..points.len()).find(|&u| adj[u].len() % 2 == 1) {
        return Err(WalkError::OddDegree(points[u]));
    }
    let Some(&start) = ids.get(&depot) else {
        return Err(WalkError::DepotNotOnTour(depot));
    };

    let mut used = vec![false; copies.len()];
    let mut cursor = vec![0usize; points.len()];
    // Stack of (vertex, edge used to arrive).
    let mut stack: Vec<(usize, Option<usize>)> = vec![(start, None)];
    let mut circuit: Vec<(usize, Option<usize>)> = Vec::with_capacity(copies.len() + 1);
    while let Some(&(u, _)) = stack.last() {
        let next = loop {
            match adj[u].get(cursor[u]) {
                Some(&k) if used[k] => cursor[u] += 1,
                other => break other.copied(),
            }
        };
        match next {
            Some(k) => {
                used[k] = true;
                let (a, b, _) = copies[k];
                stack.push((if a == u { b } else { a }, Some(k)));
            }
            None => circuit.push(stack.pop().unwrap()),
        }
    }
    if circuit.len() != copies.len() + 1 {
        return Err(WalkError::Disconnected);
    }
    circuit.reverse();
    Ok(EulerWalk {
        points: circuit.iter().map(|&(u, _)| points[u]).collect(),
        edges: circuit.iter().filter_map(|&(_, k)| k.map(|k| copies[k].2)).collect(),
    })
}
