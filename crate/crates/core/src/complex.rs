//! Simplicial complexes on closed oriented manifolds.
//!
//! Cells of each dimension are stored as sorted vertex tuples; the
//! reference orientation of a cell is the sorted order. Maximal cells
//! additionally carry a fundamental-class sign relating their listed
//! input orientation to the reference one. Construction validates the
//! closed-oriented-pseudomanifold conditions and refuses bad input.

use std::collections::{BTreeMap, HashMap};
use std::hash::{Hash, Hasher};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::IntMat;
use crate::ratio::{rat_int, Int, Rat};

pub type CellKey = Vec<u32>;

/// Parity of the permutation taking `listed` to its sorted order.
/// None if the tuple has a repeated vertex.
pub fn sort_sign(listed: &[u32]) -> Option<(CellKey, i32)> {
    let mut v: Vec<u32> = listed.to_vec();
    let mut sign = 1i32;
    // insertion sort, counting swaps
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in v.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((v, sign))
}

#[derive(Debug)]
pub struct SimplicialComplex {
    dim: usize,
    /// cells[k] lists the k-cells as sorted vertex tuples, in order
    cells: Vec<Vec<CellKey>>,
    index: Vec<HashMap<CellKey, usize>>,
    /// boundary matrices; boundaries[k] is the matrix of d_k for k >= 1,
    /// rows indexed by (k-1)-cells, columns by k-cells
    boundaries: Vec<IntMat>,
    /// fundamental-class coefficient of each top cell (+1 or -1 relative
    /// to the stored sorted orientation)
    top_signs: Vec<i32>,
    id: u64,
    name: String,
    default_weights: Option<Vec<Vec<Rat>>>,
}

impl SimplicialComplex {
    /// Build from maximal simplices whose listed vertex order is the
    /// orientation. Validates closedness and orientability.
    pub fn from_maximal(dim: usize, maximal: &[Vec<u32>], name: &str) -> Result<Self> {
        if dim == 0 || dim % 2 != 0 {
            return Err(Error::Precondition(format!(
                "ambient dimension must be a positive even integer, got {dim}"
            )));
        }
        if maximal.is_empty() {
            return Err(Error::Precondition("no maximal simplices given".into()));
        }

        let mut vertex_set: BTreeMap<u32, ()> = BTreeMap::new();
        let mut top: Vec<(CellKey, i32)> = Vec::with_capacity(maximal.len());
        for m in maximal {
            if m.len() != dim + 1 {
                return Err(Error::Parse(format!(
                    "maximal simplex {m:?} has {} vertices, expected {}",
                    m.len(),
                    dim + 1
                )));
            }
            let Some((key, sign)) = sort_sign(m) else {
                return Err(Error::Parse(format!("repeated vertex in simplex {m:?}")));
            };
            for &v in &key {
                vertex_set.insert(v, ());
            }
            top.push((key, sign));
        }
        {
            let mut seen = HashMap::new();
            for (key, _) in &top {
                if seen.insert(key.clone(), ()).is_some() {
                    return Err(Error::Parse(format!("duplicate maximal simplex {key:?}")));
                }
            }
        }

        // enumerate all faces of all dimensions
        let mut cells: Vec<Vec<CellKey>> = vec![Vec::new(); dim + 1];
        let mut index: Vec<HashMap<CellKey, usize>> = vec![HashMap::new(); dim + 1];
        cells[0] = vertex_set.keys().map(|&v| vec![v]).collect();
        for (i, c) in cells[0].iter().enumerate() {
            index[0].insert(c.clone(), i);
        }
        cells[dim] = top.iter().map(|(k, _)| k.clone()).collect();
        cells[dim].sort();
        for (i, c) in cells[dim].iter().enumerate() {
            index[dim].insert(c.clone(), i);
        }
        for k in (1..dim).rev() {
            let mut set: BTreeMap<CellKey, ()> = BTreeMap::new();
            for c in &cells[k + 1] {
                for drop in 0..c.len() {
                    let mut f = c.clone();
                    f.remove(drop);
                    set.insert(f, ());
                }
            }
            cells[k] = set.into_keys().collect();
            for (i, c) in cells[k].iter().enumerate() {
                index[k].insert(c.clone(), i);
            }
        }

        // boundary matrices on sorted tuples: d[v0..vk] = sum_i (-1)^i (drop v_i)
        let mut boundaries: Vec<IntMat> = Vec::with_capacity(dim + 1);
        boundaries.push(IntMat::zeros(0, cells[0].len())); // unused degree 0 slot
        for k in 1..=dim {
            let mut b = IntMat::zeros(cells[k - 1].len(), cells[k].len());
            for (j, c) in cells[k].iter().enumerate() {
                for drop in 0..c.len() {
                    let mut f = c.clone();
                    f.remove(drop);
                    let i = index[k - 1][&f];
                    let sign = if drop % 2 == 0 { 1i64 } else { -1i64 };
                    b.set(i, j, Int::from(sign));
                }
            }
            boundaries.push(b);
        }

        let top_signs: Vec<i32> = {
            let mut signs = vec![0i32; cells[dim].len()];
            for (key, sign) in &top {
                signs[index[dim][key]] = *sign;
            }
            signs
        };

        let complex = SimplicialComplex {
            dim,
            cells,
            index,
            boundaries,
            top_signs,
            id: 0,
            name: name.to_string(),
            default_weights: None,
        };
        complex.validate()?;

        let mut hasher = std::collections::hash_map::DefaultHasher::new();
        name.hash(&mut hasher);
        for (k, layer) in complex.cells.iter().enumerate() {
            k.hash(&mut hasher);
            layer.hash(&mut hasher);
        }
        complex.top_signs.hash(&mut hasher);
        let id = hasher.finish();

        Ok(SimplicialComplex { id, ..complex })
    }

    fn validate(&self) -> Result<()> {
        let m = self.dim;
        // every (m-1)-cell lies in exactly two maximal cells
        let bm = &self.boundaries[m];
        for i in 0..bm.rows() {
            let incident =
                (0..bm.cols()).filter(|&j| !bm.get(i, j).is_zero()).count();
            if incident != 2 {
                return Err(Error::NonManifold(format!(
                    "face {:?} lies in {} maximal cells, expected 2",
                    self.cells[m - 1][i],
                    incident
                )));
            }
        }
        // the fundamental chain must be a cycle (orientations consistent)
        let fc: Vec<Int> = self.top_signs.iter().map(|&s| Int::from(s)).collect();
        let bd = bm.mul_vec(&fc);
        if let Some(i) = bd.iter().position(|x| !x.is_zero()) {
            return Err(Error::Orientation(format!(
                "induced orientations disagree on face {:?}",
                self.cells[m - 1][i]
            )));
        }
        // chain complex axiom
        for k in 2..=m {
            if !self.boundaries[k - 1].mul(&self.boundaries[k]).is_zero() {
                return Err(Error::Invariant(format!("d o d != 0 at degree {k}")));
            }
        }
        Ok(())
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The cycle degree (m-2)/2 carried by the height machinery.
    pub fn cycle_degree(&self) -> usize {
        (self.dim - 2) / 2
    }

    pub fn n_cells(&self, k: usize) -> usize {
        self.cells.get(k).map_or(0, |c| c.len())
    }

    pub fn cell(&self, k: usize, idx: usize) -> &CellKey {
        &self.cells[k][idx]
    }

    pub fn cells(&self, k: usize) -> &[CellKey] {
        &self.cells[k]
    }

    pub fn cell_index(&self, k: usize, key: &CellKey) -> Option<usize> {
        self.index.get(k).and_then(|m| m.get(key).copied())
    }

    pub fn top_sign(&self, idx: usize) -> i32 {
        self.top_signs[idx]
    }

    pub fn euler_characteristic(&self) -> i64 {
        (0..=self.dim)
            .map(|k| {
                let n = self.n_cells(k) as i64;
                if k % 2 == 0 {
                    n
                } else {
                    -n
                }
            })
            .sum()
    }

    /// Matrix of the primal boundary operator d_k (1 <= k <= m).
    pub fn boundary(&self, k: usize) -> Result<&IntMat> {
        if k == 0 || k > self.dim {
            return Err(Error::DegreeOutOfRange(format!(
                "boundary degree {k} not in 1..={}",
                self.dim
            )));
        }
        Ok(&self.boundaries[k])
    }

    pub fn default_weights(&self) -> Option<&Vec<Vec<Rat>>> {
        self.default_weights.as_ref()
    }

    pub(crate) fn set_default_weights(&mut self, w: Vec<Vec<Rat>>) {
        self.default_weights = Some(w);
    }
}

// ---------------------------------------------------------------------------
// Shipped builders
// ---------------------------------------------------------------------------

/// Boundary of the octahedron: the 2-sphere on 6 vertices.
/// Vertices are paired as antipodes (0,1), (2,3), (4,5).
pub fn sphere_oct() -> SimplicialComplex {
    let axes = [[0u32, 1], [2, 3], [4, 5]];
    let mut tris = Vec::new();
    for sx in 0..2u32 {
        for sy in 0..2u32 {
            for sz in 0..2u32 {
                let v = [axes[0][sx as usize], axes[1][sy as usize], axes[2][sz as usize]];
                // orientation sign = product of axis signs
                let neg = (sx + sy + sz) % 2 == 1;
                if neg {
                    tris.push(vec![v[1], v[0], v[2]]);
                } else {
                    tris.push(vec![v[0], v[1], v[2]]);
                }
            }
        }
    }
    SimplicialComplex::from_maximal(2, &tris, "sphere_oct").expect("octahedron is valid")
}

/// Flat N x N grid torus, diagonal split, with the flat-metric edge
/// weights installed as the default. N >= 3.
pub fn torus_flat(n: usize) -> Result<SimplicialComplex> {
    torus_flat_rect(n, rat_int(1))
}

/// Flat torus for the rectangle [0,1] x [0,s] (s = aspect ratio > 0),
/// still on an N x N grid. The default weights are the regularized
/// cotangent weights of that metric: the diagonal edges of the split
/// squares have cotangent weight zero, which would degenerate the edge
/// inner product, so they get conductance 1/N^2 instead (weight N^2
/// scaled by aspect). s = 1 recovers the square torus.
pub fn torus_flat_rect(n: usize, aspect: Rat) -> Result<SimplicialComplex> {
    use num_traits::Signed;
    if n < 3 {
        return Err(Error::Precondition(format!(
            "torus_flat needs N >= 3, got {n} (smaller grids identify edges)"
        )));
    }
    if !aspect.is_positive() {
        return Err(Error::Precondition("aspect ratio must be positive".into()));
    }
    let v = |i: usize, j: usize| -> u32 { ((i % n) * n + (j % n)) as u32 };
    let mut tris = Vec::new();
    for i in 0..n {
        for j in 0..n {
            // square (i,j) with diagonal toward (i+1, j+1);
            // i is the x coordinate, j the y coordinate
            tris.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            tris.push(vec![v(i, j), v(i + 1, j + 1), v(i, j + 1)]);
        }
    }
    let name = if aspect == rat_int(1) {
        format!("torus_flat({n})")
    } else {
        format!("torus_flat({n};aspect={})", crate::ratio::rat_to_string(&aspect))
    };
    let mut complex = SimplicialComplex::from_maximal(2, &tris, &name)?;
    complex.set_default_weights(flat_torus_weights(&complex, n, &aspect));
    Ok(complex)
}

/// Edge weights for the flat rectangular metric on the grid torus.
/// Conductance of an edge is 1/weight: horizontal edges get conductance
/// aspect, vertical edges 1/aspect, diagonals the regularizing 1/N^2.
fn flat_torus_weights(x: &SimplicialComplex, n: usize, aspect: &Rat) -> Vec<Vec<Rat>> {
    let nn = rat_int((n * n) as i64);
    let mut per_degree: Vec<Vec<Rat>> = Vec::new();
    for k in 0..=x.dim() {
        if k != 1 {
            per_degree.push(vec![rat_int(1); x.n_cells(k)]);
            continue;
        }
        let mut w = Vec::with_capacity(x.n_cells(1));
        for e in x.cells(1) {
            let (a, b) = (e[0] as usize, e[1] as usize);
            let (ai, aj) = (a / n, a % n);
            let (bi, bj) = (b / n, b % n);
            let di = (ai + n - bi) % n;
            let dj = (aj + n - bj) % n;
            let horizontal = dj == 0; // step along i only
            let vertical = di == 0;
            if horizontal {
                w.push(Rat::from(aspect.recip()));
            } else if vertical {
                w.push(aspect.clone());
            } else {
                // diagonal: true cotangent weight is zero; keep the inner
                // product positive with a vanishing conductance instead
                w.push(&nn * std::cmp::max(aspect.clone(), aspect.recip()));
            }
        }
        per_degree.push(w);
    }
    per_degree
}

/// Closed oriented genus-g surface, g >= 1, built as an iterated
/// simplicial connected sum of 3x3 flat tori. Keeps cell counts small so
/// the exact solvers stay fast.
pub fn genus_surface(g: usize) -> Result<SimplicialComplex> {
    if g == 0 {
        return Err(Error::Precondition("genus_surface needs g >= 1".into()));
    }
    if g == 1 {
        return torus_flat(3);
    }
    let block = torus_flat(3)?;
    let block_tris: Vec<Vec<u32>> = oriented_top_cells(&block);

    // two vertex-disjoint triangles of the 3x3 torus, found once
    let (cut_a, cut_b) = disjoint_triangle_pair(&block)
        .expect("3x3 torus has vertex-disjoint triangles");

    // Assemble g blocks; block i uses vertices offset by 9*i. Every other
    // block is mirrored so each seam glues orientation-reversing copies.
    let mut tris: Vec<Vec<u32>> = Vec::new();
    let mut identify: HashMap<u32, u32> = HashMap::new();
    for b in 0..g {
        let offset = (9 * b) as u32;
        let mirrored = b % 2 == 1;
        let removed: Vec<&Vec<u32>> = {
            let mut r = Vec::new();
            if b > 0 {
                r.push(&block_tris[cut_a]);
            }
            if b + 1 < g {
                r.push(&block_tris[cut_b]);
            }
            r
        };
        for t in &block_tris {
            if removed.iter().any(|r| *r == t) {
                continue;
            }
            let mut s: Vec<u32> = t.iter().map(|&v| v + offset).collect();
            if mirrored {
                s.swap(0, 1);
            }
            tris.push(s);
        }
        if b > 0 {
            // glue this block's cut_a triangle boundary to the previous
            // block's cut_b boundary, vertex by vertex
            let prev = (9 * (b - 1)) as u32;
            for (va, vb) in block_tris[cut_a].iter().zip(block_tris[cut_b].iter()) {
                identify.insert(va + offset, vb + prev);
            }
        }
    }
    // resolve identification chains and relabel densely
    let resolve = |mut v: u32| -> u32 {
        while let Some(&w) = identify.get(&v) {
            v = w;
        }
        v
    };
    let mut relabel: HashMap<u32, u32> = HashMap::new();
    let mut out: Vec<Vec<u32>> = Vec::new();
    for t in &tris {
        let mut s = Vec::with_capacity(3);
        for &v in t {
            let r = resolve(v);
            let next = relabel.len() as u32;
            let id = *relabel.entry(r).or_insert(next);
            s.push(id);
        }
        out.push(s);
    }
    SimplicialComplex::from_maximal(2, &out, &format!("genus_surface({g})"))
}

/// Top cells with vertex order realizing the fundamental orientation.
fn oriented_top_cells(x: &SimplicialComplex) -> Vec<Vec<u32>> {
    (0..x.n_cells(x.dim()))
        .map(|t| {
            let mut c = x.cell(x.dim(), t).clone();
            if x.top_sign(t) < 0 {
                c.swap(0, 1);
            }
            c
        })
        .collect()
}

fn disjoint_triangle_pair(x: &SimplicialComplex) -> Option<(usize, usize)> {
    let m = x.dim();
    for a in 0..x.n_cells(m) {
        for b in a + 1..x.n_cells(m) {
            let ca = x.cell(m, a);
            let cb = x.cell(m, b);
            if ca.iter().all(|v| !cb.contains(v)) {
                return Some((a, b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedron_counts() {
        let x = sphere_oct();
        assert_eq!(x.n_cells(0), 6);
        assert_eq!(x.n_cells(1), 12);
        assert_eq!(x.n_cells(2), 8);
        assert_eq!(x.euler_characteristic(), 2);
    }

    #[test]
    fn torus_counts() {
        let x = torus_flat(3).unwrap();
        assert_eq!(x.n_cells(0), 9);
        assert_eq!(x.n_cells(1), 27);
        assert_eq!(x.n_cells(2), 18);
        assert_eq!(x.euler_characteristic(), 0);
        assert!(x.default_weights().is_some());
    }

    #[test]
    fn torus_needs_three() {
        assert!(torus_flat(2).is_err());
    }

    #[test]
    fn genus_two_euler() {
        let x = genus_surface(2).unwrap();
        assert_eq!(x.euler_characteristic(), -2);
        let x3 = genus_surface(3).unwrap();
        assert_eq!(x3.euler_characteristic(), -4);
    }

    #[test]
    fn bad_orientation_rejected() {
        // two triangles sharing edge {1,2} with the same induced
        // orientation on it: a sphere-like closure is impossible, and
        // the shared edge has same-sign coefficients
        let tris = vec![
            vec![0, 1, 2],
            vec![3, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 1],
        ];
        let err = SimplicialComplex::from_maximal(2, &tris, "bad").unwrap_err();
        match err {
            Error::Orientation(_) | Error::NonManifold(_) => {}
            other => panic!("expected orientation failure, got {other:?}"),
        }
    }

    #[test]
    fn open_surface_rejected() {
        let tris = vec![vec![0, 1, 2], vec![0, 2, 3]];
        assert!(matches!(
            SimplicialComplex::from_maximal(2, &tris, "strip"),
            Err(Error::NonManifold(_))
        ));
    }

    #[test]
    fn tetra_boundary_valid() {
        // boundary of the 3-simplex, oriented: faces (-1)^i omitting i
        let tris = vec![
            vec![1, 2, 3],
            vec![0, 3, 2],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ];
        let x = SimplicialComplex::from_maximal(2, &tris, "tetra").unwrap();
        assert_eq!(x.euler_characteristic(), 2);
    }

    #[test]
    fn boundary_column_sums_vanish_in_degree_one() {
        let x = sphere_oct();
        let b = x.boundary(1).unwrap();
        for j in 0..b.cols() {
            let mut s = Int::zero();
            for i in 0..b.rows() {
                s += b.get(i, j);
            }
            assert!(s.is_zero(), "edge boundary must be head - tail");
        }
        assert!(x.boundary(0).is_err());
        assert!(x.boundary(3).is_err());
    }
}
