use crate::error::{Error, Result};

/// H-type structure on 𝔫 = 𝔳 ⊕ 𝔷 stored as the matrices J_l = J_{e_l},
/// with [V, V']_l = ⟨J_l V, V'⟩.
#[derive(Debug, Clone, PartialEq)]
pub struct HTypeStructure {
    m: usize,
    k: usize,
    /// j[l][row][col]
    j: Vec<Vec<Vec<f64>>>,
}

const STRUCTURE_TOL: f64 = 1e-12;

impl HTypeStructure {
    /// Heisenberg algebra on ℝ^{m/2} × ℝ^{m/2}: J(v, w) = (-w, v).
    pub fn heisenberg(m: usize) -> Result<Self> {
        if m == 0 || !m.is_multiple_of(2) {
            return Err(Error::InvalidInput(format!("Heisenberg structure needs even m, got {m}")));
        }
        let h = m / 2;
        let mut j = vec![vec![0.0; m]; m];
        for i in 0..h {
            j[i][h + i] = -1.0;
            j[h + i][i] = 1.0;
        }
        Self::from_matrices(vec![j])
    }

    /// Quaternionic structure on ℍ^q (m = 4q, k = 3): left multiplication by i, j, k.
    pub fn quaternionic(q: usize) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidInput("quaternionic structure needs q >= 1".into()));
        }
        let blocks: [[[f64; 4]; 4]; 3] = [
            [[0., -1., 0., 0.], [1., 0., 0., 0.], [0., 0., 0., -1.], [0., 0., 1., 0.]],
            [[0., 0., -1., 0.], [0., 0., 0., 1.], [1., 0., 0., 0.], [0., -1., 0., 0.]],
            [[0., 0., 0., -1.], [0., 0., -1., 0.], [0., 1., 0., 0.], [1., 0., 0., 0.]],
        ];
        let m = 4 * q;
        let mats = blocks
            .iter()
            .map(|b| {
                let mut j = vec![vec![0.0; m]; m];
                for s in 0..q {
                    for r in 0..4 {
                        for c in 0..4 {
                            j[4 * s + r][4 * s + c] = b[r][c];
                        }
                    }
                }
                j
            })
            .collect();
        Self::from_matrices(mats)
    }

    /// From a bracket table c[l][i][j] = [e_i, e_j]_l.
    pub fn from_bracket_table(table: Vec<Vec<Vec<f64>>>) -> Result<Self> {
        let k = table.len();
        let m = table.first().map_or(0, |t| t.len());
        let mut mats = Vec::with_capacity(k);
        for t in &table {
            if t.len() != m || t.iter().any(|row| row.len() != m) {
                return Err(Error::InvalidStructure("bracket table must be k × m × m".into()));
            }
            for (i, row) in t.iter().enumerate() {
                for (jj, &x) in row.iter().enumerate() {
                    if (x + t[jj][i]).abs() > STRUCTURE_TOL {
                        return Err(Error::InvalidStructure(format!("bracket not antisymmetric at ({i}, {jj})")));
                    }
                }
            }
            // ⟨J_l e_i, e_j⟩ = c[l][i][j], so (J_l)_{ji} = c[l][i][j].
            mats.push((0..m).map(|r| (0..m).map(|c| t[c][r]).collect()).collect());
        }
        Self::from_matrices(mats)
    }

    fn from_matrices(j: Vec<Vec<Vec<f64>>>) -> Result<Self> {
        let k = j.len();
        let m = j.first().map_or(0, |x| x.len());
        if k == 0 || m == 0 || !m.is_multiple_of(2) {
            return Err(Error::InvalidStructure(format!("need k >= 1 and even m >= 2, got m={m}, k={k}")));
        }
        let s = Self { m, k, j };
        s.validate()?;
        Ok(s)
    }

    /// J_l² = -I and J_l J_l' + J_l' J_l = 0, which together give J_Z² = -|Z|².
    pub fn validate(&self) -> Result<()> {
        let m = self.m;
        let prod = |a: &Vec<Vec<f64>>, b: &Vec<Vec<f64>>, r: usize, c: usize| -> f64 {
            (0..m).map(|t| a[r][t] * b[t][c]).sum()
        };
        for l in 0..self.k {
            for l2 in l..self.k {
                for r in 0..m {
                    for c in 0..m {
                        let v = if l == l2 {
                            prod(&self.j[l], &self.j[l], r, c) + if r == c { 1.0 } else { 0.0 }
                        } else {
                            prod(&self.j[l], &self.j[l2], r, c) + prod(&self.j[l2], &self.j[l], r, c)
                        };
                        if v.abs() > STRUCTURE_TOL {
                            return Err(Error::InvalidStructure(format!(
                                "J_{l} J_{l2} relation fails at ({r}, {c}) by {v}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn bracket(&self, v: &[f64], w: &[f64]) -> Vec<f64> {
        (0..self.k)
            .map(|l| {
                let jl = &self.j[l];
                (0..self.m).map(|r| (0..self.m).map(|c| jl[r][c] * v[c]).sum::<f64>() * w[r]).sum()
            })
            .collect()
    }

    /// J_Z V.
    pub fn j_map(&self, z: &[f64], v: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; self.m];
        for (l, &zl) in z.iter().enumerate() {
            for (r, o) in out.iter_mut().enumerate() {
                *o += zl * (0..self.m).map(|c| self.j[l][r][c] * v[c]).sum::<f64>();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dot(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn heisenberg_bracket_is_symplectic() {
        let s = HTypeStructure::heisenberg(2).unwrap();
        let (v, w) = ([0.3, -1.2], [2.0, 0.7]);
        let b = s.bracket(&v, &w);
        assert!((b[0] - (v[0] * w[1] - v[1] * w[0])).abs() < 1e-15);
        assert_eq!(s.j_map(&[1.0], &[1.0, 0.0]), vec![0.0, 1.0]);
    }

    #[test]
    fn compatibility_on_basis() {
        for s in [HTypeStructure::heisenberg(6).unwrap(), HTypeStructure::quaternionic(2).unwrap()] {
            let (m, k) = (s.m(), s.k());
            let e = |i: usize, n: usize| (0..n).map(|t| if t == i { 1.0 } else { 0.0 }).collect::<Vec<_>>();
            for i in 0..m {
                for j in 0..m {
                    for l in 0..k {
                        let lhs = dot(&s.j_map(&e(l, k), &e(i, m)), &e(j, m));
                        let rhs = dot(&s.bracket(&e(i, m), &e(j, m)), &e(l, k));
                        assert!((lhs - rhs).abs() < 1e-15);
                    }
                }
            }
            // J_Z² V = -|Z|² V
            let z: Vec<f64> = (0..k).map(|l| 0.3 + l as f64).collect();
            let v: Vec<f64> = (0..m).map(|i| (i as f64).sin()).collect();
            let jjv = s.j_map(&z, &s.j_map(&z, &v));
            let zz = dot(&z, &z);
            for (a, b) in jjv.iter().zip(&v) {
                assert!((a + zz * b).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn rejects_invalid_tables() {
        // Antisymmetric but J² ≠ -I.
        let t = vec![vec![vec![0.0, 2.0], vec![-2.0, 0.0]]];
        assert!(matches!(HTypeStructure::from_bracket_table(t), Err(Error::InvalidStructure(_))));
        let t = vec![vec![vec![0.0, 1.0], vec![1.0, 0.0]]];
        assert!(HTypeStructure::from_bracket_table(t).is_err());
        let ok = vec![vec![vec![0.0, 1.0], vec![-1.0, 0.0]]];
        assert_eq!(HTypeStructure::from_bracket_table(ok).unwrap(), HTypeStructure::heisenberg(2).unwrap());
    }
}
