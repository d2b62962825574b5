//! Exact solver for intertwiner systems M·A = B·M where every constraint
//! matrix is monomial (one nonzero entry per row and per column), as all
//! Heisenberg operators are in the delta basis.
//!
//! Each scalar equation couples exactly two unknown entries of M, so the
//! whole system is a graph of proportionality relations. A weighted
//! union-find propagates the ratios; inconsistent cycles force their whole
//! component to zero. The nullspace dimension is the number of surviving
//! components — n² unknowns are handled in near-linear time, where dense
//! elimination would be hopeless at the larger moduli.

use crate::error::Error;
use crate::matrix::OpMatrix;
use crate::scalar::Scalar;
use crate::Result;

/// Monomial profile of a matrix: for each column j, the unique row σ(j)
/// holding the nonzero entry α_j. Returns None if not monomial.
fn column_profile<S: Scalar>(m: &OpMatrix<S>) -> Option<(Vec<usize>, Vec<S>)> {
    let n = m.rows();
    let mut sigma = vec![usize::MAX; n];
    let mut alpha = vec![S::zero(); n];
    for j in 0..n {
        let mut found = None;
        for i in 0..n {
            if !m.at(i, j).is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        let i = found?;
        sigma[j] = i;
        alpha[j] = m.at(i, j).clone();
    }
    Some((sigma, alpha))
}

/// Row profile: for each row i, the unique column τ(i) and entry β_i.
fn row_profile<S: Scalar>(m: &OpMatrix<S>) -> Option<(Vec<usize>, Vec<S>)> {
    let t = m.transpose();
    column_profile(&t)
}

struct RatioUnionFind<S> {
    parent: Vec<usize>,
    /// x_i = weight[i] · x_parent[i]
    weight: Vec<S>,
    dead: Vec<bool>,
}

impl<S: Scalar> RatioUnionFind<S> {
    fn new(n: usize) -> Self {
        RatioUnionFind {
            parent: (0..n).collect(),
            weight: vec![S::one(); n],
            dead: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, S) {
        if self.parent[x] == x {
            return (x, self.weight[x].clone());
        }
        let (root, wp) = self.find(self.parent[x]);
        let w = self.weight[x].mul(&wp);
        self.parent[x] = root;
        self.weight[x] = w.clone();
        (root, w)
    }

    fn scalars_equal(a: &S, b: &S) -> bool {
        if S::EXACT {
            a == b
        } else {
            (a.embed() - b.embed()).norm() <= 1e-9
        }
    }

    /// Impose x_u = r · x_v.
    fn relate(&mut self, u: usize, v: usize, r: &S) {
        let (ru, wu) = self.find(u);
        let (rv, wv) = self.find(v);
        if ru == rv {
            if !Self::scalars_equal(&wu, &r.mul(&wv)) {
                self.dead[ru] = true;
            }
            return;
        }
        // x_ru = wu⁻¹·r·wv · x_rv
        let w = wu.inv().expect("weights are nonzero").mul(&r.mul(&wv));
        self.parent[ru] = rv;
        self.weight[ru] = w;
        let dead = self.dead[ru];
        self.dead[rv] |= dead;
    }
}

/// Solves M·Aᵢ = Bᵢ·M over all constraint pairs. Returns the solution-space
/// dimension together with one nonzero solution (normalized so its first
/// nonzero entry in row-major order is 1) when the dimension is ≥ 1.
pub(crate) fn monomial_intertwiner_solve<S: Scalar>(
    n: usize,
    constraints: &[(OpMatrix<S>, OpMatrix<S>)],
) -> Result<(usize, Option<OpMatrix<S>>)> {
    let mut uf = RatioUnionFind::<S>::new(n * n);
    for (a, b) in constraints {
        let (sigma, alpha) = column_profile(a)
            .ok_or_else(|| Error::NoSolution("constraint matrix is not monomial".into()))?;
        let (tau, beta) = row_profile(b)
            .ok_or_else(|| Error::NoSolution("constraint matrix is not monomial".into()))?;
        // (M·A)[i][j] = M[i][σ(j)]·α_j ; (B·M)[i][j] = β_i·M[τ(i)][j]
        for i in 0..n {
            for j in 0..n {
                let u = i * n + sigma[j];
                let v = tau[i] * n + j;
                let r = beta[i].mul(&alpha[j].inv().expect("monomial entries are nonzero"));
                uf.relate(u, v, &r);
            }
        }
    }
    // one alive component = one free scalar
    let mut alive_roots = Vec::new();
    for x in 0..n * n {
        let (root, _) = uf.find(x);
        if !uf.dead[root] && !alive_roots.contains(&root) {
            alive_roots.push(root);
        }
    }
    let dim = alive_roots.len();
    if dim == 0 {
        return Ok((0, None));
    }
    // materialize the component containing the smallest node index
    let mut chosen_root = None;
    let mut sol = OpMatrix::<S>::zeros(n, n);
    for x in 0..n * n {
        let (root, w) = uf.find(x);
        if uf.dead[root] {
            continue;
        }
        if chosen_root.is_none() {
            chosen_root = Some(root);
        }
        if Some(root) == chosen_root {
            sol.set(x / n, x % n, w);
        }
    }
    let (_, _, first) = sol.first_nonzero().expect("component is nonzero");
    let scale = first.inv().expect("nonzero entry");
    Ok((dim, Some(sol.scale(&scale))))
}
