use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use crate::model::{Distance, Instance, Point};

/// The warehouse as an explicit weighted graph: corner vertices `a_j`, `b_j`,
/// one vertex per distinct item location, aisle segments between vertically
/// adjacent vertices and cross segments between neighbouring corners.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WarehouseGraph {
    pub vertices: Vec<Point>,
    /// `(u, v, length)` by vertex index.
    pub edges: Vec<(usize, usize, Distance)>,
    index: BTreeMap<Point, usize>,
    adjacency: Vec<Vec<(usize, Distance)>>,
}

impl WarehouseGraph {
    pub fn vertex(&self, p: Point) -> Option<usize> {
        self.index.get(&p).copied()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Single-source shortest distances (Dijkstra).
    pub fn distances_from(&self, source: usize) -> Vec<Distance> {
        let mut dist = vec![Distance::MAX; self.vertices.len()];
        let mut heap = BinaryHeap::new();
        dist[source] = 0;
        heap.push(Reverse((0, source)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for &(v, w) in &self.adjacency[u] {
                let nd = d + w;
                if nd < dist[v] {
                    dist[v] = nd;
                    heap.push(Reverse((nd, v)));
                }
            }
        }
        dist
    }
}

pub fn build_graph(inst: &Instance) -> WarehouseGraph {
    let l = inst.aisle_length;
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut index = BTreeMap::new();
    let mut add = |p: Point, vertices: &mut Vec<Point>| {
        *index.entry(p).or_insert_with(|| {
            vertices.push(p);
            vertices.len() - 1
        })
    };

    let mut corners = Vec::with_capacity(inst.num_aisles);
    for j in 1..=inst.num_aisles {
        let mut stops: Vec<Distance> = inst.items.iter().filter(|i| i.aisle == j).map(|i| i.offset).collect();
        stops.push(0);
        stops.push(l);
        stops.sort_unstable();
        stops.dedup();
        let ids: Vec<usize> = stops.iter().map(|&y| add(Point::new(j, y), &mut vertices)).collect();
        for (w, pair) in stops.windows(2).zip(ids.windows(2)) {
            edges.push((pair[0], pair[1], w[1] - w[0]));
        }
        corners.push((ids[0], *ids.last().unwrap()));
    }
    for j in 1..inst.num_aisles {
        let (b_left, a_left) = corners[j - 1];
        let (b_right, a_right) = corners[j];
        edges.push((a_left, a_right, inst.top_cross[j - 1]));
        edges.push((b_left, b_right, inst.bottom_cross[j - 1]));
    }

    let mut adjacency = vec![Vec::new(); vertices.len()];
    for &(u, v, w) in &edges {
        adjacency[u].push((v, w));
        adjacency[v].push((u, w));
    }
    WarehouseGraph {
        vertices,
        edges,
        index,
        adjacency,
    }
}

/// Shortest-path distances between the required points of an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    /// Depot first, then distinct item locations.
    pub points: Vec<Point>,
    pub dist: Vec<Vec<Distance>>,
}

impl DistanceMatrix {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> Distance {
        self.dist[i][j]
    }
}

/// Runs Dijkstra from every required point of `inst` over `g`.
pub fn all_pairs_shortest(g: &WarehouseGraph, inst: &Instance) -> DistanceMatrix {
    let points = inst.required_points();
    let ids: Vec<usize> = points
        .iter()
        .map(|&p| g.vertex(p).expect("required point is a graph vertex"))
        .collect();
    let dist = ids
        .iter()
        .map(|&s| {
            let from = g.distances_from(s);
            ids.iter().map(|&t| from[t]).collect()
        })
        .collect();
    DistanceMatrix { points, dist }
}
