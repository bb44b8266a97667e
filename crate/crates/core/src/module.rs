//! Finite-dimensional modules over a bound quiver algebra.
//!
//! Vectors are rows. An arrow `a: x -> y` carries a matrix of shape
//! `dim M(x) x dim M(y)`, and a path acts by the product of its arrow
//! matrices in order. With this convention the indecomposable projective
//! at `x` is the path space `A(x, -)` and `Hom(P_x, M) = M(x)`.

use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::algebra::{Algebra, Path};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{solve_left, Mat};

#[derive(Debug, Clone)]
pub struct FDModule<F: Field> {
    algebra: Arc<Algebra<F>>,
    dims: Vec<usize>,
    maps: Vec<Mat<F>>,
}

/// A family of vertex matrices commuting with the arrow maps.
#[derive(Debug, Clone)]
pub struct ModMorphism<F: Field> {
    src: FDModule<F>,
    tgt: FDModule<F>,
    mats: Vec<Mat<F>>,
}

fn relation_label<F: Field>(alg: &Algebra<F>, r: usize) -> String {
    alg.relations()[r]
        .terms
        .iter()
        .map(|t| {
            let p: Vec<&str> = t.path.iter().map(|&a| alg.arrow(a).name.as_str()).collect();
            format!("{}*{}", t.coeff, p.join("."))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

impl<F: Field> FDModule<F> {
    /// Checks shapes and relations.
    pub fn new(algebra: Arc<Algebra<F>>, dims: Vec<usize>, maps: Vec<Mat<F>>) -> Result<Self> {
        if dims.len() != algebra.n_vertices() || maps.len() != algebra.arrows().len() {
            return Err(Error::DimensionMismatch(format!(
                "module needs {} dimensions and {} arrow maps, got {} and {}",
                algebra.n_vertices(),
                algebra.arrows().len(),
                dims.len(),
                maps.len()
            )));
        }
        for (i, a) in algebra.arrows().iter().enumerate() {
            if maps[i].shape() != (dims[a.src], dims[a.tgt]) {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.src],
                    dims[a.tgt],
                    maps[i].rows(),
                    maps[i].cols()
                )));
            }
        }
        let m = Self { algebra, dims, maps };
        m.validate()?;
        Ok(m)
    }

    pub fn zero(algebra: &Arc<Algebra<F>>) -> Self {
        Self::with_dims_zero_maps(algebra, vec![0; algebra.n_vertices()])
    }

    /// The simple module at `v`.
    pub fn simple(algebra: &Arc<Algebra<F>>, v: usize) -> Self {
        let mut dims = vec![0; algebra.n_vertices()];
        dims[v] = 1;
        Self::with_dims_zero_maps(algebra, dims)
    }

    fn with_dims_zero_maps(algebra: &Arc<Algebra<F>>, dims: Vec<usize>) -> Self {
        let f = algebra.field();
        let maps = algebra.arrows().iter().map(|a| Mat::zeros(f, dims[a.src], dims[a.tgt])).collect();
        Self { algebra: algebra.clone(), dims, maps }
    }

    /// Every relation acts as zero.
    pub fn validate(&self) -> Result<()> {
        let alg = &self.algebra;
        for (r, rel) in alg.relations().iter().enumerate() {
            let Some(first) = rel.terms.first() else { continue };
            let x = alg.path_source(&first.path);
            let y = alg.path_target(&first.path);
            let mut acc = Mat::zeros(self.field(), self.dims[x], self.dims[y]);
            for t in &rel.terms {
                acc = acc.add_scaled(&self.path_matrix(x, &t.path), &t.coeff);
            }
            if !acc.is_zero() {
                return Err(Error::RelationViolated {
                    relation: relation_label(alg, r),
                    vertex: alg.vertex_name(x).to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.algebra
    }

    pub fn field(&self) -> &F {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn map(&self, a: usize) -> &Mat<F> {
        &self.maps[a]
    }

    pub fn maps(&self) -> &[Mat<F>] {
        &self.maps
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&v| self.dims[v] > 0).collect()
    }

    pub fn same_carrier(&self, other: &Self) -> bool {
        self.algebra.id() == other.algebra.id()
    }

    pub(crate) fn check_carrier(&self, other: &Self) -> Result<()> {
        if self.same_carrier(other) {
            Ok(())
        } else {
            Err(Error::CarrierMismatch("modules live over different algebras".into()))
        }
    }

    /// Action of a path starting at `x`; the empty path is the identity on `M(x)`.
    pub fn path_matrix(&self, x: usize, p: &Path) -> Mat<F> {
        let mut m = Mat::identity(self.field(), self.dims[x]);
        for &a in p {
            m = m.mul(&self.maps[a]);
        }
        m
    }

    /// Action `M(x) -> M(y)` of an element of `A(x, y)` given in path-basis coordinates.
    pub fn element_action(&self, x: usize, y: usize, coeffs: &[F::Elem]) -> Mat<F> {
        let f = self.field();
        let mut acc = Mat::zeros(f, self.dims[x], self.dims[y]);
        for (c, p) in coeffs.iter().zip(self.algebra.path_basis(x, y)) {
            if !f.is_zero(c) {
                acc = acc.add_scaled(&self.path_matrix(x, p), c);
            }
        }
        acc
    }

    /// The dual `Hom_k(M, k)` as a module over the opposite algebra.
    pub fn dual(&self) -> Self {
        Self {
            algebra: self.algebra.opposite(),
            dims: self.dims.clone(),
            maps: self.maps.iter().map(|m| m.transpose()).collect(),
        }
    }

    /// The same representation viewed over another algebra with an identical quiver.
    pub fn rebase(&self, algebra: &Arc<Algebra<F>>) -> Result<Self> {
        let same_quiver =
            algebra.n_vertices() == self.algebra.n_vertices() && algebra.arrows() == self.algebra.arrows();
        if !same_quiver {
            return Err(Error::CarrierMismatch("quivers differ".into()));
        }
        Ok(Self { algebra: algebra.clone(), dims: self.dims.clone(), maps: self.maps.clone() })
    }

    /// Direct sum, summands stacked in order at every vertex.
    pub fn direct_sum(parts: &[Self]) -> Result<Self> {
        let Some(first) = parts.first() else {
            return Err(Error::InvalidArgument("direct sum of no modules".into()));
        };
        for p in parts {
            first.check_carrier(p)?;
        }
        let alg = first.algebra.clone();
        let dims = (0..alg.n_vertices()).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..alg.arrows().len())
            .map(|a| {
                let mut m = parts[0].maps[a].clone();
                for p in &parts[1..] {
                    m = m.direct_sum(&p.maps[a]);
                }
                m
            })
            .collect();
        Ok(Self { algebra: alg, dims, maps })
    }

    /// Inclusion of the `i`-th summand into `direct_sum(parts)`.
    pub fn injection(parts: &[Self], i: usize) -> Result<ModMorphism<F>> {
        let sum = Self::direct_sum(parts)?;
        let f = sum.field().clone();
        let mats = (0..sum.dims.len())
            .map(|v| {
                let off: usize = parts[..i].iter().map(|p| p.dims[v]).sum();
                let mut m = Mat::zeros(&f, parts[i].dims[v], sum.dims[v]);
                m.set_block(0, off, &Mat::identity(&f, parts[i].dims[v]));
                m
            })
            .collect();
        Ok(ModMorphism { src: parts[i].clone(), tgt: sum, mats })
    }

    /// Projection of `direct_sum(parts)` onto the `i`-th summand.
    pub fn projection(parts: &[Self], i: usize) -> Result<ModMorphism<F>> {
        let inj = Self::injection(parts, i)?;
        Ok(ModMorphism {
            src: inj.tgt.clone(),
            tgt: inj.src.clone(),
            mats: inj.mats.iter().map(|m| m.transpose()).collect(),
        })
    }

    /// Module literal `{"dims": {...}, "arrowmaps": {...}}`.
    pub fn to_json(&self) -> Value {
        let alg = &self.algebra;
        let mut dims = Map::new();
        for v in self.support() {
            dims.insert(alg.vertex_name(v).to_string(), json!(self.dims[v]));
        }
        let mut maps = Map::new();
        for (i, a) in alg.arrows().iter().enumerate() {
            if self.dims[a.src] > 0 && self.dims[a.tgt] > 0 {
                maps.insert(a.name.clone(), matrix_json(&self.maps[i]));
            }
        }
        json!({"dims": dims, "arrowmaps": maps})
    }

    /// Parses a module literal; absent vertices have dimension 0 and absent arrows act by zero.
    pub fn from_json(algebra: &Arc<Algebra<F>>, doc: &Value) -> Result<Self> {
        let f = algebra.field();
        let obj = doc.as_object().ok_or_else(|| Error::Schema("module must be an object".into()))?;
        for k in obj.keys() {
            if k != "dims" && k != "arrowmaps" && k != "id" && k != "decomposition" {
                return Err(Error::Schema(format!("unknown module field {k:?}")));
            }
        }
        let mut dims = vec![0; algebra.n_vertices()];
        if let Some(d) = obj.get("dims") {
            let d = d.as_object().ok_or_else(|| Error::Schema("dims must be an object".into()))?;
            for (name, n) in d {
                let v = algebra.vertex_index(name).ok_or_else(|| Error::Schema(format!("unknown vertex {name:?}")))?;
                dims[v] =
                    n.as_u64().ok_or_else(|| Error::Schema(format!("dimension at {name:?} is not a natural number")))?
                        as usize;
            }
        }
        let mut maps: Vec<Mat<F>> = algebra.arrows().iter().map(|a| Mat::zeros(f, dims[a.src], dims[a.tgt])).collect();
        if let Some(m) = obj.get("arrowmaps") {
            let m = m.as_object().ok_or_else(|| Error::Schema("arrowmaps must be an object".into()))?;
            for (name, mat) in m {
                let a = algebra.arrow_index(name).ok_or_else(|| Error::Schema(format!("unknown arrow {name:?}")))?;
                let arrow = algebra.arrow(a);
                maps[a] = parse_matrix(f, mat, dims[arrow.src], dims[arrow.tgt]).map_err(|e| match e {
                    Error::DimensionMismatch(d) => Error::DimensionMismatch(format!("arrow {name}: {d}")),
                    other => other,
                })?;
            }
        }
        Self::new(algebra.clone(), dims, maps)
    }
}

fn matrix_json<F: Field>(m: &Mat<F>) -> Value {
    let rows: Vec<Value> = (0..m.rows())
        .map(|r| {
            Value::Array(
                m.row(r)
                    .iter()
                    .map(|e| {
                        let s = e.to_string();
                        s.parse::<i64>().map(Value::from).unwrap_or(Value::String(s))
                    })
                    .collect(),
            )
        })
        .collect();
    Value::Array(rows)
}

fn parse_matrix<F: Field>(f: &F, v: &Value, rows: usize, cols: usize) -> Result<Mat<F>> {
    let arr = v.as_array().ok_or_else(|| Error::Schema("matrix must be a list of rows".into()))?;
    // A matrix with no rows has no way to state its width.
    if arr.is_empty() && (rows == 0 || cols == 0) {
        return Ok(Mat::zeros(f, rows, cols));
    }
    if arr.len() != rows {
        return Err(Error::DimensionMismatch(format!("expected {rows} rows, got {}", arr.len())));
    }
    let mut out = Vec::with_capacity(rows);
    for row in arr {
        let row = row.as_array().ok_or_else(|| Error::Schema("matrix row must be a list".into()))?;
        if row.len() != cols {
            return Err(Error::DimensionMismatch(format!("expected {cols} columns, got {}", row.len())));
        }
        let parsed = row
            .iter()
            .map(|e| match e {
                Value::Number(n) => f.parse(&n.to_string()),
                Value::String(s) => f.parse(s),
                _ => Err(Error::Schema("matrix entry must be a number or string".into())),
            })
            .collect::<Result<Vec<_>>>()?;
        out.push(parsed);
    }
    Ok(Mat::from_rows(f, cols, out))
}

impl<F: Field> ModMorphism<F> {
    /// Checks shapes and the commuting squares.
    pub fn new(src: FDModule<F>, tgt: FDModule<F>, mats: Vec<Mat<F>>) -> Result<Self> {
        src.check_carrier(&tgt)?;
        if mats.len() != src.dims.len() {
            return Err(Error::DimensionMismatch("one matrix per vertex required".into()));
        }
        for (v, m) in mats.iter().enumerate() {
            if m.shape() != (src.dims[v], tgt.dims[v]) {
                return Err(Error::DimensionMismatch(format!(
                    "vertex {}: expected {}x{}",
                    src.algebra.vertex_name(v),
                    src.dims[v],
                    tgt.dims[v]
                )));
            }
        }
        let f = Self { src, tgt, mats };
        for (a, arrow) in f.src.algebra.arrows().iter().enumerate() {
            let left = f.src.maps[a].mul(&f.mats[arrow.tgt]);
            let right = f.mats[arrow.src].mul(&f.tgt.maps[a]);
            if left != right {
                return Err(Error::InvalidArgument(format!("square at arrow {} does not commute", arrow.name)));
            }
        }
        Ok(f)
    }

    pub fn zero(src: &FDModule<F>, tgt: &FDModule<F>) -> Self {
        let f = src.field();
        let mats = (0..src.dims.len()).map(|v| Mat::zeros(f, src.dims[v], tgt.dims[v])).collect();
        Self { src: src.clone(), tgt: tgt.clone(), mats }
    }

    pub fn identity(m: &FDModule<F>) -> Self {
        let f = m.field();
        let mats = m.dims.iter().map(|&d| Mat::identity(f, d)).collect();
        Self { src: m.clone(), tgt: m.clone(), mats }
    }

    pub fn src(&self) -> &FDModule<F> {
        &self.src
    }

    pub fn tgt(&self) -> &FDModule<F> {
        &self.tgt
    }

    pub fn mat(&self, v: usize) -> &Mat<F> {
        &self.mats[v]
    }

    pub fn mats(&self) -> &[Mat<F>] {
        &self.mats
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Self) -> Self {
        let mats = self.mats.iter().zip(&next.mats).map(|(a, b)| a.mul(b)).collect();
        Self { src: self.src.clone(), tgt: next.tgt.clone(), mats }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a.add(b)).collect();
        Self { src: self.src.clone(), tgt: self.tgt.clone(), mats }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mats = self.mats.iter().zip(&other.mats).map(|(a, b)| a.sub(b)).collect();
        Self { src: self.src.clone(), tgt: self.tgt.clone(), mats }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mats = self.mats.iter().map(|a| a.scale(c)).collect();
        Self { src: self.src.clone(), tgt: self.tgt.clone(), mats }
    }

    /// Linear combination `sum c_i f_i` of parallel morphisms.
    pub fn combination(src: &FDModule<F>, tgt: &FDModule<F>, fs: &[Self], cs: &[F::Elem]) -> Self {
        let mut acc = Self::zero(src, tgt);
        for (g, c) in fs.iter().zip(cs) {
            if !src.field().is_zero(c) {
                acc.mats = acc.mats.iter().zip(&g.mats).map(|(a, b)| a.add_scaled(b, c)).collect();
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(|m| m.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.mats.iter().map(|m| m.rank()).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.src.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.tgt.total_dim()
    }

    pub fn is_iso(&self) -> bool {
        self.src.dims == self.tgt.dims && self.mats.iter().all(|m| m.is_invertible())
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.src.dims != self.tgt.dims {
            return None;
        }
        let mats = self.mats.iter().map(|m| m.inverse()).collect::<Option<Vec<_>>>()?;
        Some(Self { src: self.tgt.clone(), tgt: self.src.clone(), mats })
    }

    /// `D(f): D(tgt) -> D(src)` over the opposite algebra.
    pub fn dual(&self) -> Self {
        Self { src: self.tgt.dual(), tgt: self.src.dual(), mats: self.mats.iter().map(|m| m.transpose()).collect() }
    }

    /// All vertex matrices on the diagonal of one square-block matrix.
    pub fn block_matrix(&self) -> Mat<F> {
        let f = self.src.field();
        let mut out = Mat::zeros(f, self.src.total_dim(), self.tgt.total_dim());
        let (mut r, mut c) = (0, 0);
        for m in &self.mats {
            out.set_block(r, c, m);
            r += m.rows();
            c += m.cols();
        }
        out
    }

    pub fn kernel(&self) -> (FDModule<F>, ModMorphism<F>) {
        let bases = self.mats.iter().map(|m| m.left_kernel()).collect();
        submodule(&self.src, bases).expect("kernel is a submodule")
    }

    pub fn image(&self) -> (FDModule<F>, ModMorphism<F>) {
        let bases = self.mats.iter().map(|m| m.row_basis()).collect();
        submodule(&self.tgt, bases).expect("image is a submodule")
    }

    pub fn cokernel(&self) -> (FDModule<F>, ModMorphism<F>) {
        let bases: Vec<Mat<F>> = self.mats.iter().map(|m| m.row_basis()).collect();
        quotient(&self.tgt, &bases)
    }

    /// All vertex matrices flattened into one row.
    pub fn flatten(&self) -> Vec<F::Elem> {
        self.mats.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }
}

/// Coefficients `c` with `sum c_i fs[i] = target`, if any.
pub fn express_in_span<F: Field>(fs: &[ModMorphism<F>], target: &ModMorphism<F>) -> Result<Option<Vec<F::Elem>>> {
    let f = target.src.field();
    let width = target.flatten().len();
    if fs.is_empty() {
        return Ok(if target.is_zero() { Some(Vec::new()) } else { None });
    }
    let a = Mat::from_rows(f, width, fs.iter().map(|g| g.flatten()).collect());
    let b = Mat::from_rows(f, width, vec![target.flatten()]);
    Ok(solve_left(&a, &b)?.map(|x| x.row_vec(0)))
}

/// Submodule spanned at each vertex by the given rows; errors if not closed under the arrows.
pub fn submodule<F: Field>(m: &FDModule<F>, bases: Vec<Mat<F>>) -> Result<(FDModule<F>, ModMorphism<F>)> {
    let alg = m.algebra.clone();
    let f = m.field().clone();
    let dims: Vec<usize> = bases.iter().map(|b| b.rows()).collect();
    let mut maps = Vec::with_capacity(alg.arrows().len());
    for (a, arrow) in alg.arrows().iter().enumerate() {
        let (x, y) = (arrow.src, arrow.tgt);
        if dims[x] == 0 || dims[y] == 0 {
            if dims[x] > 0 && !bases[x].mul(&m.maps[a]).is_zero() {
                return Err(Error::InvalidArgument("subspace is not closed under the arrows".into()));
            }
            maps.push(Mat::zeros(&f, dims[x], dims[y]));
            continue;
        }
        let image = bases[x].mul(&m.maps[a]);
        let sol = solve_left(&bases[y], &image)?
            .ok_or_else(|| Error::InvalidArgument("subspace is not closed under the arrows".into()))?;
        maps.push(sol);
    }
    let sub = FDModule { algebra: alg, dims, maps };
    let incl = ModMorphism { src: sub.clone(), tgt: m.clone(), mats: bases };
    Ok((sub, incl))
}

/// Quotient by the submodule spanned by `bases` (assumed closed), with the projection.
pub fn quotient<F: Field>(m: &FDModule<F>, bases: &[Mat<F>]) -> (FDModule<F>, ModMorphism<F>) {
    let alg = m.algebra.clone();
    let f = m.field().clone();
    let n = alg.n_vertices();
    let mut comps = Vec::with_capacity(n);
    let mut projs = Vec::with_capacity(n);
    for v in 0..n {
        let d = m.dims[v];
        let b = if bases[v].cols() == d { bases[v].row_basis() } else { Mat::zeros(&f, 0, d) };
        let c = b.complement_rows();
        let k = b.rows();
        let t = b.vstack(&c);
        let inv = t.inverse().expect("basis plus complement is invertible");
        projs.push(inv.block(0, k, d, d - k));
        comps.push(c);
    }
    let dims: Vec<usize> = comps.iter().map(|c| c.rows()).collect();
    let maps = alg
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| comps[arrow.src].mul(&m.maps[a]).mul(&projs[arrow.tgt]))
        .collect();
    let q = FDModule { algebra: alg, dims, maps };
    let proj = ModMorphism { src: m.clone(), tgt: q.clone(), mats: projs };
    (q, proj)
}

/// A basis of `Hom(M, N)`, from one linear system over all commuting squares.
pub fn hom_basis<F: Field>(m: &FDModule<F>, n: &FDModule<F>) -> Result<Vec<ModMorphism<F>>> {
    m.check_carrier(n)?;
    let f = m.field();
    let alg = &m.algebra;
    let nv = alg.n_vertices();
    let mut offsets = Vec::with_capacity(nv);
    let mut unknowns = 0;
    for v in 0..nv {
        offsets.push(unknowns);
        unknowns += m.dims[v] * n.dims[v];
    }
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for (a, arrow) in alg.arrows().iter().enumerate() {
        let (x, y) = (arrow.src, arrow.tgt);
        let (ma, na) = (&m.maps[a], &n.maps[a]);
        // M_a f_y - f_x N_a = 0, entry (i, j)
        for i in 0..m.dims[x] {
            for j in 0..n.dims[y] {
                let mut row = vec![f.zero(); unknowns];
                for k in 0..m.dims[y] {
                    let c = ma.get(i, k);
                    if !f.is_zero(c) {
                        let idx = offsets[y] + k * n.dims[y] + j;
                        row[idx] = f.add(&row[idx], c);
                    }
                }
                for k in 0..n.dims[x] {
                    let c = na.get(k, j);
                    if !f.is_zero(c) {
                        let idx = offsets[x] + i * n.dims[x] + k;
                        row[idx] = f.sub(&row[idx], c);
                    }
                }
                if row.iter().any(|e| !f.is_zero(e)) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Mat::from_rows(f, unknowns, rows);
    let kernel = system.kernel_basis();
    let mut out = Vec::with_capacity(kernel.cols());
    for c in 0..kernel.cols() {
        let col = kernel.col_vec(c);
        let mats = (0..nv)
            .map(|v| {
                let len = m.dims[v] * n.dims[v];
                let data = col[offsets[v]..offsets[v] + len].to_vec();
                Mat::from_vec(f, m.dims[v], n.dims[v], data).expect("block size")
            })
            .collect();
        out.push(ModMorphism { src: m.clone(), tgt: n.clone(), mats });
    }
    Ok(out)
}

pub fn hom_dim<F: Field>(m: &FDModule<F>, n: &FDModule<F>) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

/// The indecomposable projective `A(x, -)`.
pub fn projective_at<F: Field>(algebra: &Arc<Algebra<F>>, x: usize) -> Result<FDModule<F>> {
    if !algebra.proj_complete(x) {
        return Err(Error::WindowTooSmall(format!("projective at {} leaves the window", algebra.vertex_name(x))));
    }
    let dims = (0..algebra.n_vertices()).map(|v| algebra.dim(x, v)).collect();
    let maps = (0..algebra.arrows().len()).map(|a| algebra.right_arrow_matrix(x, a)).collect();
    Ok(FDModule { algebra: algebra.clone(), dims, maps })
}

/// The indecomposable injective `D A(-, x)`.
pub fn injective_at<F: Field>(algebra: &Arc<Algebra<F>>, x: usize) -> Result<FDModule<F>> {
    if !algebra.inj_complete(x) {
        return Err(Error::WindowTooSmall(format!("injective at {} leaves the window", algebra.vertex_name(x))));
    }
    Ok(projective_at(&algebra.opposite(), x)?.dual())
}

/// The projective `P_{x_1} + ... + P_{x_k}`; repeated vertices allowed.
pub fn projective_sum<F: Field>(algebra: &Arc<Algebra<F>>, vertices: &[usize]) -> Result<FDModule<F>> {
    if vertices.is_empty() {
        return Ok(FDModule::zero(algebra));
    }
    let parts = vertices.iter().map(|&x| projective_at(algebra, x)).collect::<Result<Vec<_>>>()?;
    FDModule::direct_sum(&parts)
}

/// The morphism `P_{x_1} + ... + P_{x_k} -> N` sending the generator of the
/// `i`-th summand to `elems[i]` in `N(x_i)`.
pub fn from_projective_sum<F: Field>(
    source: &FDModule<F>,
    vertices: &[usize],
    target: &FDModule<F>,
    elems: &[Vec<F::Elem>],
) -> ModMorphism<F> {
    let alg = target.algebra.clone();
    let f = target.field();
    let nv = alg.n_vertices();
    let mats = (0..nv)
        .map(|w| {
            let mut rows = Vec::with_capacity(source.dims[w]);
            for (&x, e) in vertices.iter().zip(elems) {
                let gen = Mat::from_rows(f, target.dims[x], vec![e.clone()]);
                for p in alg.path_basis(x, w) {
                    rows.push(gen.mul(&target.path_matrix(x, p)).row_vec(0));
                }
            }
            Mat::from_rows(f, target.dims[w], rows)
        })
        .collect();
    ModMorphism { src: source.clone(), tgt: target.clone(), mats }
}
