//! Minimal resolutions, syzygies, the Auslander-Reiten translate and Ext.

use std::fmt;

use serde::Serialize;

use crate::decompose::{assemble_from_sum, indecomposable_summands};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Mat;
use crate::module::{express_in_span, from_projective_sum, hom_basis, projective_sum, FDModule, ModMorphism};
use crate::structure::{is_projective, projective_cover};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Projective,
    Injective,
}

/// A minimal projective resolution `P_k -> ... -> P_0 -> M` or injective
/// coresolution `M -> I^0 -> ... -> I^k`.
///
/// `maps[0]` is the augmentation (`P_0 -> M`, resp. `M -> I^0`) and
/// `maps[i]` connects the terms of index `i - 1` and `i`. `syzygies[i]` is
/// `Omega^i M` (resp. `Omega^{-i} M`), so `syzygies[0]` is `M`.
#[derive(Debug, Clone)]
pub struct Resolution<F: Field> {
    pub direction: Direction,
    pub terms: Vec<FDModule<F>>,
    /// Indecomposable summands of each term, by vertex.
    pub vertices: Vec<Vec<usize>>,
    pub maps: Vec<ModMorphism<F>>,
    pub syzygies: Vec<FDModule<F>>,
    /// `images[i][j][l]`: for `i >= 1`, the coefficient in `A(x_l, y_j)` of
    /// the image of the `j`-th generator of `P_i` in the `l`-th summand of `P_{i-1}`.
    images: Vec<Vec<Vec<Vec<F::Elem>>>>,
}

/// Bounded homological invariants: either a value or "beyond the bound".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "value")]
pub enum BoundedDim {
    Exact(usize),
    /// The invariant is at least (dominant dimension) or exceeds (injective dimension) the bound.
    Beyond(usize),
}

impl fmt::Display for BoundedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundedDim::Exact(n) => write!(f, "{n}"),
            BoundedDim::Beyond(n) => write!(f, "beyond {n}"),
        }
    }
}

fn split_blocks<F: Field>(row: &[F::Elem], sizes: &[usize]) -> Vec<Vec<F::Elem>> {
    let mut out = Vec::with_capacity(sizes.len());
    let mut at = 0;
    for &s in sizes {
        out.push(row[at..at + s].to_vec());
        at += s;
    }
    out
}

/// Minimal projective resolution with terms `P_0, ..., P_len`.
pub fn min_proj_resolution<F: Field>(m: &FDModule<F>, len: usize) -> Result<Resolution<F>> {
    let alg = m.algebra().clone();
    let mut terms = Vec::new();
    let mut vertices = Vec::new();
    let mut maps = Vec::new();
    let mut syzygies = vec![m.clone()];
    let mut images = vec![Vec::new()];
    let mut prev_incl: Option<ModMorphism<F>> = None;
    for i in 0..=len {
        let cur = syzygies[i].clone();
        let cover = projective_cover(&cur)?;
        let aug = cover.map.clone();
        match &prev_incl {
            None => maps.push(aug.clone()),
            Some(incl) => {
                maps.push(aug.then(incl));
                let prev_vertices: &Vec<usize> = &vertices[i - 1];
                let gens = cover
                    .vertices
                    .iter()
                    .zip(&cover.generators)
                    .map(|(&y, g)| {
                        let row = Mat::from_rows(alg.field(), cur.dim(y), vec![g.clone()]).mul(incl.mat(y));
                        let sizes: Vec<usize> = prev_vertices.iter().map(|&x| alg.dim(x, y)).collect();
                        split_blocks::<F>(&row.row_vec(0), &sizes)
                    })
                    .collect();
                images.push(gens);
            }
        }
        let (k, incl) = aug.kernel();
        terms.push(aug.src().clone());
        vertices.push(cover.vertices);
        syzygies.push(k);
        prev_incl = Some(incl);
    }
    Ok(Resolution { direction: Direction::Projective, terms, vertices, maps, syzygies, images })
}

/// Minimal injective coresolution with terms `I^0, ..., I^len`, the dual of a
/// projective resolution over the opposite algebra.
pub fn min_inj_coresolution<F: Field>(m: &FDModule<F>, len: usize) -> Result<Resolution<F>> {
    let r = min_proj_resolution(&m.dual(), len)?;
    Ok(Resolution {
        direction: Direction::Injective,
        terms: r.terms.iter().map(|t| t.dual()).collect(),
        vertices: r.vertices,
        maps: r.maps.iter().map(|f| f.dual()).collect(),
        syzygies: r.syzygies.iter().map(|s| s.dual()).collect(),
        images: r.images,
    })
}

impl<F: Field> Resolution<F> {
    /// Consecutive maps compose to zero and every interior term is exact.
    pub fn is_exact(&self) -> bool {
        let n = self.maps.len();
        for i in 0..n.saturating_sub(1) {
            let (first, second) = match self.direction {
                Direction::Projective => (&self.maps[i + 1], &self.maps[i]),
                Direction::Injective => (&self.maps[i], &self.maps[i + 1]),
            };
            if !first.then(second).is_zero() {
                return false;
            }
            // rank(first) + rank(second) = dim of the middle term
            if first.rank() + second.rank() != first.tgt().total_dim() {
                return false;
            }
        }
        match self.direction {
            Direction::Projective => self.maps[0].is_surjective(),
            Direction::Injective => self.maps[0].is_injective(),
        }
    }

    /// Length of the resolution if it stops within the computed range.
    pub fn length(&self) -> Option<usize> {
        self.terms.iter().position(|t| t.is_zero()).map(|i| i.saturating_sub(1))
    }
}

pub fn syzygy<F: Field>(m: &FDModule<F>, i: usize) -> Result<FDModule<F>> {
    if i == 0 {
        return Ok(m.clone());
    }
    Ok(min_proj_resolution(m, i - 1)?.syzygies[i].clone())
}

pub fn cosyzygy<F: Field>(m: &FDModule<F>, i: usize) -> Result<FDModule<F>> {
    Ok(syzygy(&m.dual(), i)?.dual())
}

/// The transpose, a module over the opposite algebra.
pub fn transpose<F: Field>(m: &FDModule<F>) -> Result<FDModule<F>> {
    let alg = m.algebra().clone();
    let op = alg.opposite();
    let res = min_proj_resolution(m, 1)?;
    let xs = &res.vertices[0];
    let ys = &res.vertices[1];
    let source = projective_sum(&op, xs)?;
    let target = projective_sum(&op, ys)?;
    let elems: Vec<Vec<F::Elem>> = xs
        .iter()
        .enumerate()
        .map(|(l, &x)| ys.iter().enumerate().flat_map(|(j, &y)| alg.to_opposite(x, y, &res.images[1][j][l])).collect())
        .collect();
    let d = from_projective_sum(&source, xs, &target, &elems);
    Ok(d.cokernel().0)
}

/// `tau = D Tr`.
pub fn tau<F: Field>(m: &FDModule<F>) -> Result<FDModule<F>> {
    Ok(transpose(m)?.dual())
}

/// `tau^- = Tr D`.
pub fn tau_minus<F: Field>(m: &FDModule<F>) -> Result<FDModule<F>> {
    transpose(&m.dual())
}

/// `tau_n = tau Omega^{n-1}`.
pub fn tau_n<F: Field>(m: &FDModule<F>, n: usize) -> Result<FDModule<F>> {
    if n == 0 {
        return Err(Error::InvalidArgument("tau_n needs n >= 1".into()));
    }
    tau(&syzygy(m, n - 1)?)
}

/// `tau_n^- = tau^- Omega^{-(n-1)}`.
pub fn tau_n_minus<F: Field>(m: &FDModule<F>, n: usize) -> Result<FDModule<F>> {
    if n == 0 {
        return Err(Error::InvalidArgument("tau_n^- needs n >= 1".into()));
    }
    tau_minus(&cosyzygy(m, n - 1)?)
}

#[derive(Debug, Clone)]
pub struct ExtSpace<F: Field> {
    pub degree: usize,
    pub dim: usize,
    /// Rows: cocycles in `Hom(P_degree, N)`, coordinates per generator of `P_degree`.
    pub cocycles: Mat<F>,
}

/// Matrix of `Hom(P_k, N) -> Hom(P_{k+1}, N)` in generator coordinates.
fn hom_differential<F: Field>(res: &Resolution<F>, n: &FDModule<F>, k: usize) -> Mat<F> {
    let f = n.field();
    let xs = &res.vertices[k];
    let ys = &res.vertices[k + 1];
    let rows: usize = xs.iter().map(|&x| n.dim(x)).sum();
    let cols: usize = ys.iter().map(|&y| n.dim(y)).sum();
    let mut out = Mat::zeros(f, rows, cols);
    let mut c0 = 0;
    for (j, &y) in ys.iter().enumerate() {
        let mut r0 = 0;
        for (l, &x) in xs.iter().enumerate() {
            let block = n.element_action(x, y, &res.images[k + 1][j][l]);
            out.set_block(r0, c0, &block);
            r0 += n.dim(x);
        }
        c0 += n.dim(y);
    }
    out
}

/// `Ext^i(M, N)` as the cohomology of `Hom(P_*, N)`.
pub fn ext_space<F: Field>(m: &FDModule<F>, n: &FDModule<F>, i: usize) -> Result<ExtSpace<F>> {
    m.check_carrier(n)?;
    let res = min_proj_resolution(m, i + 1)?;
    let outgoing = hom_differential(&res, n, i);
    let cocycles = outgoing.left_kernel();
    let incoming_rank = if i == 0 { 0 } else { hom_differential(&res, n, i - 1).rank() };
    let dim = cocycles.rows() - incoming_rank;
    Ok(ExtSpace { degree: i, dim, cocycles })
}

pub fn ext_dim<F: Field>(m: &FDModule<F>, n: &FDModule<F>, i: usize) -> Result<usize> {
    Ok(ext_space(m, n, i)?.dim)
}

/// The evaluation map `sum_i U_i^{Hom(U_i, M)} -> M`, pruned greedily so that
/// a basis map is only added when it does not already factor.
pub fn right_approximation<F: Field>(generators: &[FDModule<F>], m: &FDModule<F>) -> Result<ModMorphism<F>> {
    let mut parts: Vec<FDModule<F>> = Vec::new();
    let mut maps: Vec<ModMorphism<F>> = Vec::new();
    let mut current = ModMorphism::zero(&FDModule::zero(m.algebra()), m);
    for u in generators {
        u.check_carrier(m)?;
        for g in hom_basis(u, m)? {
            if !parts.is_empty() {
                let through: Vec<ModMorphism<F>> =
                    hom_basis(u, current.src())?.iter().map(|h| h.then(&current)).collect();
                if express_in_span(&through, &g)?.is_some() {
                    continue;
                }
            }
            parts.push(u.clone());
            maps.push(g);
            current = assemble_from_sum(&parts, &maps, m)?;
        }
    }
    Ok(current)
}

/// The coevaluation map `M -> sum_i U_i^{Hom(M, U_i)}`, computed dually.
pub fn left_approximation<F: Field>(generators: &[FDModule<F>], m: &FDModule<F>) -> Result<ModMorphism<F>> {
    let duals: Vec<FDModule<F>> = generators.iter().map(|u| u.dual()).collect();
    Ok(right_approximation(&duals, &m.dual())?.dual())
}

/// `Ext^i_F(M, N)` for the exact structure whose projectives are `add(U + projectives)`.
pub fn relative_ext<F: Field>(generators: &[FDModule<F>], m: &FDModule<F>, n: &FDModule<F>, i: usize) -> Result<usize> {
    let alg = m.algebra().clone();
    let mut gens: Vec<FDModule<F>> = (0..alg.n_vertices())
        .filter(|&v| alg.proj_complete(v))
        .map(|v| crate::module::projective_at(&alg, v))
        .collect::<Result<_>>()?;
    gens.extend(generators.iter().cloned());
    // complex X_{i+1} -> X_i -> X_{i-1}; d[k]: X_k -> X_{k-1}, d[0]: X_0 -> M
    let mut d: Vec<ModMorphism<F>> = Vec::new();
    let mut cur = m.clone();
    let mut prev_incl: Option<ModMorphism<F>> = None;
    for _ in 0..=i + 1 {
        let approx = right_approximation(&gens, &cur)?;
        if !approx.is_surjective() {
            return Err(Error::ApproximationNotSurjective("the generators do not cover the module".into()));
        }
        d.push(match &prev_incl {
            None => approx.clone(),
            Some(incl) => approx.then(incl),
        });
        let (k, incl) = approx.kernel();
        cur = k;
        prev_incl = Some(incl);
    }
    let rank_pre = |map: &ModMorphism<F>| -> Result<usize> {
        let basis = hom_basis(map.tgt(), n)?;
        if basis.is_empty() {
            return Ok(0);
        }
        let rows: Vec<Vec<F::Elem>> = basis.iter().map(|h| map.then(h).flatten()).collect();
        let width = rows[0].len();
        Ok(Mat::from_rows(n.field(), width, rows).rank())
    };
    let x_i = d[i].src();
    let total = hom_basis(x_i, n)?.len();
    let out_rank = rank_pre(&d[i + 1])?;
    let in_rank = if i == 0 { 0 } else { rank_pre(&d[i])? };
    Ok(total - out_rank - in_rank)
}

/// Injective dimension if at most `bound`.
pub fn inj_dim_upto<F: Field>(m: &FDModule<F>, bound: usize) -> Result<BoundedDim> {
    if m.is_zero() {
        return Ok(BoundedDim::Exact(0));
    }
    let res = min_inj_coresolution(m, bound + 1)?;
    Ok(match res.length() {
        Some(l) if l <= bound => BoundedDim::Exact(l),
        _ => BoundedDim::Beyond(bound),
    })
}

/// Projective dimension if at most `bound`.
pub fn proj_dim_upto<F: Field>(m: &FDModule<F>, bound: usize) -> Result<BoundedDim> {
    if m.is_zero() {
        return Ok(BoundedDim::Exact(0));
    }
    let res = min_proj_resolution(m, bound + 1)?;
    Ok(match res.length() {
        Some(l) if l <= bound => BoundedDim::Exact(l),
        _ => BoundedDim::Beyond(bound),
    })
}

/// Dominant dimension of `M`: how many initial terms of its minimal injective
/// coresolution are projective, capped at `bound`.
pub fn module_dominant_dimension<F: Field>(m: &FDModule<F>, bound: usize) -> Result<BoundedDim> {
    let res = min_inj_coresolution(m, bound.saturating_sub(1))?;
    for (k, term) in res.terms.iter().enumerate().take(bound) {
        for (s, _) in indecomposable_summands(term)? {
            if !is_projective(&s)? {
                return Ok(BoundedDim::Exact(k));
            }
        }
    }
    Ok(BoundedDim::Beyond(bound))
}

/// Dominant dimension of the algebra, tested on the projectives at `vertices`.
pub fn dominant_dimension_upto<F: Field>(
    algebra: &std::sync::Arc<crate::algebra::Algebra<F>>,
    vertices: &[usize],
    bound: usize,
) -> Result<BoundedDim> {
    let mut best = BoundedDim::Beyond(bound);
    for &x in vertices {
        let p = crate::module::projective_at(algebra, x)?;
        if let BoundedDim::Exact(d) = module_dominant_dimension(&p, bound)? {
            best = match best {
                BoundedDim::Exact(b) if b <= d => best,
                _ => BoundedDim::Exact(d),
            };
        }
    }
    Ok(best)
}
