//! Exact rational linear programming.
//!
//! Two-phase dense simplex with Bland's anti-cycling pivot rule, entirely over
//! exact rationals. The programs solved here are tiny (on the order of the
//! ambient dimension plus the number of generators), so exactness is worth far
//! more than speed. Equality constraints are handled as double inequalities;
//! entering/leaving ties break toward the lowest index, which makes every
//! solve deterministic.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    /// `coeffs · x >= rhs`
    Ge,
    /// `coeffs · x == rhs`
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rat>,
    pub relation: Relation,
    pub rhs: Rat,
}

impl Constraint {
    pub fn ge(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        Constraint { coeffs, relation: Relation::Ge, rhs }
    }

    pub fn eq(coeffs: Vec<Rat>, rhs: Rat) -> Self {
        Constraint { coeffs, relation: Relation::Eq, rhs }
    }

    /// Exact re-evaluation: does `x` satisfy this constraint?
    pub fn satisfied_by(&self, x: &[Rat]) -> bool {
        let lhs: Rat = self.coeffs.iter().zip(x).map(|(c, v)| c * v).sum();
        match self.relation {
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

/// Minimization program over variables `x_0 .. x_{num_vars-1}`; variables with
/// `nonneg[i]` set carry the lower bound `x_i >= 0`, the rest are free.
#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<Rat>,
    pub constraints: Vec<Constraint>,
    pub nonneg: Vec<bool>,
}

impl LinearProgram {
    pub fn all_nonneg(num_vars: usize, objective: Vec<Rat>, constraints: Vec<Constraint>) -> Self {
        LinearProgram { num_vars, objective, constraints, nonneg: vec![true; num_vars] }
    }

    fn validate(&self) -> Result<()> {
        if self.objective.len() != self.num_vars {
            return Err(Error::MalformedProgram(format!(
                "objective has {} coefficients for {} variables",
                self.objective.len(),
                self.num_vars
            )));
        }
        if self.nonneg.len() != self.num_vars {
            return Err(Error::MalformedProgram("nonneg mask length mismatch".into()));
        }
        for (i, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != self.num_vars {
                return Err(Error::MalformedProgram(format!(
                    "constraint {i} has {} coefficients for {} variables",
                    c.coeffs.len(),
                    self.num_vars
                )));
            }
        }
        if self.num_vars == 0 {
            return Err(Error::MalformedProgram("program has no variables".into()));
        }
        if self.constraints.is_empty() && self.nonneg.iter().all(|b| !b) {
            return Err(Error::MalformedProgram(
                "program needs at least one constraint or variable bound".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rat, witness: Vec<Rat> },
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn optimal(self) -> Option<(Rat, Vec<Rat>)> {
        match self {
            LpOutcome::Optimal { value, witness } => Some((value, witness)),
            _ => None,
        }
    }
}

/// Exact optimum over the rationals; the status classification is sound and
/// complete for the given program.
pub fn lp_minimize(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    let mut t = Tableau::build(lp);
    if !t.phase_one() {
        return Ok(LpOutcome::Infeasible);
    }
    if !t.phase_two() {
        return Ok(LpOutcome::Unbounded);
    }
    let witness = t.witness();
    let value: Rat = lp.objective.iter().zip(&witness).map(|(c, v)| c * v).sum();
    Ok(LpOutcome::Optimal { value, witness })
}

/// Phase one of `lp_minimize`: exact feasibility with a rational witness.
pub fn lp_feasible(
    num_vars: usize,
    constraints: Vec<Constraint>,
    nonneg: Vec<bool>,
) -> Result<Option<Vec<Rat>>> {
    let lp = LinearProgram { num_vars, objective: vec![Rat::zero(); num_vars], constraints, nonneg };
    Ok(lp_minimize(&lp)?.optimal().map(|(_, w)| w))
}

/// Dense simplex tableau in equation form. Columns are laid out as
/// `[structural (split) | surplus/slack | artificial]`, one basic column per
/// row at all times, right-hand sides kept nonnegative.
struct Tableau {
    rows: Vec<Vec<Rat>>,
    rhs: Vec<Rat>,
    basis: Vec<usize>,
    ncols: usize,
    first_artificial: usize,
    /// structural column(s) per original variable: (positive part, negative part)
    var_cols: Vec<(usize, Option<usize>)>,
    /// phase-two objective over structural columns
    objective: Vec<Rat>,
}

impl Tableau {
    fn build(lp: &LinearProgram) -> Tableau {
        // free variables split as x = p - q with p, q >= 0
        let mut var_cols = Vec::with_capacity(lp.num_vars);
        let mut next = 0usize;
        for i in 0..lp.num_vars {
            if lp.nonneg[i] {
                var_cols.push((next, None));
                next += 1;
            } else {
                var_cols.push((next, Some(next + 1)));
                next += 2;
            }
        }
        let n_struct = next;

        let mut objective = vec![Rat::zero(); n_struct];
        for (i, &(pos, neg)) in var_cols.iter().enumerate() {
            objective[pos] = lp.objective[i].clone();
            if let Some(neg) = neg {
                objective[neg] = -&lp.objective[i];
            }
        }

        // equality rows become a pair of opposite inequalities
        let mut ge_rows: Vec<(Vec<Rat>, Rat)> = Vec::new();
        for c in &lp.constraints {
            let mut coeffs = vec![Rat::zero(); n_struct];
            for (i, &(pos, neg)) in var_cols.iter().enumerate() {
                coeffs[pos] = c.coeffs[i].clone();
                if let Some(neg) = neg {
                    coeffs[neg] = -&c.coeffs[i];
                }
            }
            match c.relation {
                Relation::Ge => ge_rows.push((coeffs, c.rhs.clone())),
                Relation::Eq => {
                    let negated: Vec<Rat> = coeffs.iter().map(|v| -v).collect();
                    ge_rows.push((coeffs, c.rhs.clone()));
                    ge_rows.push((negated, -&c.rhs));
                }
            }
        }

        let m = ge_rows.len();
        // one surplus column per row; artificial columns added where the
        // surplus cannot begin basic
        let mut rows = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let mut needs_artificial = Vec::new();
        for (r, (mut coeffs, mut b)) in ge_rows.into_iter().enumerate() {
            coeffs.resize(n_struct + m, Rat::zero());
            if b.is_negative() {
                // negate so the slack starts basic at a nonnegative value
                for v in coeffs.iter_mut() {
                    *v = -&*v;
                }
                b = -b;
                coeffs[n_struct + r] = Rat::one();
                basis.push(n_struct + r);
            } else {
                coeffs[n_struct + r] = -Rat::one();
                needs_artificial.push(r);
                basis.push(usize::MAX); // patched below
            }
            rows.push(coeffs);
            rhs.push(b);
        }
        let first_artificial = n_struct + m;
        let ncols = first_artificial + needs_artificial.len();
        for row in rows.iter_mut() {
            row.resize(ncols, Rat::zero());
        }
        for (k, &r) in needs_artificial.iter().enumerate() {
            rows[r][first_artificial + k] = Rat::one();
            basis[r] = first_artificial + k;
        }
        Tableau { rows, rhs, basis, ncols, first_artificial, var_cols, objective }
    }

    fn pivot(&mut self, row: usize, col: usize, obj: &mut [Rat]) {
        let pivot = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            *v = &*v / &pivot;
        }
        self.rhs[row] = &self.rhs[row] / &pivot;
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let factor = self.rows[r][col].clone();
            for c in 0..self.ncols {
                if self.rows[row][c].is_zero() {
                    continue;
                }
                let delta = &factor * &self.rows[row][c];
                self.rows[r][c] = &self.rows[r][c] - &delta;
            }
            let delta = &factor * &self.rhs[row];
            self.rhs[r] = &self.rhs[r] - &delta;
        }
        if !obj[col].is_zero() {
            let factor = obj[col].clone();
            for c in 0..self.ncols {
                if self.rows[row][c].is_zero() {
                    continue;
                }
                let delta = &factor * &self.rows[row][c];
                obj[c] = &obj[c] - &delta;
            }
        }
        self.basis[row] = col;
    }

    /// Runs simplex iterations for the given reduced-cost row. Returns false
    /// on detecting an unbounded direction.
    fn iterate(&mut self, obj: &mut Vec<Rat>) -> bool {
        loop {
            // Bland: entering column = lowest index with negative reduced cost
            let Some(enter) = (0..self.ncols).find(|&j| obj[j].is_negative()) else {
                return true;
            };
            // leaving row: minimal ratio, ties toward the lowest basic index
            let mut leave: Option<(usize, Rat)> = None;
            for r in 0..self.rows.len() {
                if !self.rows[r][enter].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / &self.rows[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, lratio)) => {
                        ratio < *lratio || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                    }
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            let Some((row, _)) = leave else {
                return false;
            };
            self.pivot(row, enter, obj);
        }
    }

    /// Phase one: minimize the sum of artificial variables. Returns false on
    /// infeasibility; otherwise artificials are driven out and dropped.
    fn phase_one(&mut self) -> bool {
        if self.first_artificial == self.ncols {
            return true;
        }
        let mut obj = vec![Rat::zero(); self.ncols];
        for c in self.first_artificial..self.ncols {
            obj[c] = Rat::one();
        }
        // price out the initially basic artificials
        for r in 0..self.rows.len() {
            if self.basis[r] >= self.first_artificial {
                for c in 0..self.ncols {
                    obj[c] = &obj[c] - &self.rows[r][c];
                }
            }
        }
        let bounded = self.iterate(&mut obj);
        debug_assert!(bounded, "phase one is bounded below by zero");
        let value: Rat = (0..self.rows.len())
            .filter(|&r| self.basis[r] >= self.first_artificial)
            .map(|r| self.rhs[r].clone())
            .sum();
        if value.is_positive() {
            return false;
        }
        // pivot remaining (zero-valued) artificials out of the basis
        let mut r = 0;
        while r < self.rows.len() {
            if self.basis[r] >= self.first_artificial {
                match (0..self.first_artificial).find(|&c| !self.rows[r][c].is_zero()) {
                    Some(c) => self.pivot(r, c, &mut obj),
                    None => {
                        // redundant row
                        self.rows.remove(r);
                        self.rhs.remove(r);
                        self.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
        for row in self.rows.iter_mut() {
            row.truncate(self.first_artificial);
        }
        self.ncols = self.first_artificial;
        true
    }

    /// Phase two with the caller's objective. Returns false if unbounded.
    fn phase_two(&mut self) -> bool {
        let mut obj = vec![Rat::zero(); self.ncols];
        obj[..self.objective.len()].clone_from_slice(&self.objective);
        for r in 0..self.rows.len() {
            let b = self.basis[r];
            if !obj[b].is_zero() {
                let factor = obj[b].clone();
                for c in 0..self.ncols {
                    let delta = &factor * &self.rows[r][c];
                    obj[c] = &obj[c] - &delta;
                }
            }
        }
        self.iterate(&mut obj)
    }

    fn witness(&self) -> Vec<Rat> {
        let mut cols = vec![Rat::zero(); self.ncols];
        for (r, &b) in self.basis.iter().enumerate() {
            cols[b] = self.rhs[r].clone();
        }
        self.var_cols
            .iter()
            .map(|&(pos, neg)| match neg {
                None => cols[pos].clone(),
                Some(neg) => &cols[pos] - &cols[neg],
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rat {
        Rat::from_int(n)
    }

    fn rats(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&n| rat(n)).collect()
    }

    #[test]
    fn vertex_optimum() {
        // min x + y  s.t.  3x + 2y >= 6, x,y >= 0  ->  2 at (2, 0)
        let lp = LinearProgram::all_nonneg(
            2,
            rats(&[1, 1]),
            vec![Constraint::ge(rats(&[3, 2]), rat(6))],
        );
        let outcome = lp_minimize(&lp).unwrap();
        assert_eq!(
            outcome,
            LpOutcome::Optimal { value: rat(2), witness: rats(&[2, 0]) }
        );
    }

    #[test]
    fn unbounded() {
        let lp = LinearProgram::all_nonneg(1, rats(&[-1]), vec![]);
        assert_eq!(lp_minimize(&lp).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn infeasible() {
        // x >= 1 and -x >= 0
        let lp = LinearProgram::all_nonneg(
            1,
            rats(&[0]),
            vec![Constraint::ge(rats(&[1]), rat(1)), Constraint::ge(rats(&[-1]), rat(0))],
        );
        assert_eq!(lp_minimize(&lp).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn feasibility_with_equalities() {
        // mu1 + mu2 = 1, 2 mu1 + s1 = 1, 3 mu2 + s2 = 2, all >= 0
        // (encodes (1,2) lying in the Newton polyhedron of <x^2, y^3>)
        let constraints = vec![
            Constraint::eq(rats(&[1, 1, 0, 0]), rat(1)),
            Constraint::eq(rats(&[2, 0, 1, 0]), rat(1)),
            Constraint::eq(rats(&[0, 3, 0, 1]), rat(2)),
        ];
        let w = lp_feasible(4, constraints.clone(), vec![true; 4]).unwrap().unwrap();
        for c in &constraints {
            assert!(c.satisfied_by(&w), "witness violates {c:?}");
        }
        assert!(w.iter().all(|v| !v.is_negative()));
    }

    #[test]
    fn empty_constraints_feasible() {
        let w = lp_feasible(1, vec![], vec![true]).unwrap().unwrap();
        assert_eq!(w, rats(&[0]));
    }

    #[test]
    fn witness_satisfies_constraints_exactly() {
        let lp = LinearProgram::all_nonneg(
            3,
            rats(&[2, 3, 1]),
            vec![
                Constraint::ge(rats(&[1, 1, 0]), rat(2)),
                Constraint::ge(rats(&[0, 1, 3]), rat(5)),
                Constraint::eq(rats(&[1, 0, 1]), rat(3)),
            ],
        );
        let (value, w) = lp_minimize(&lp).unwrap().optimal().unwrap();
        for c in &lp.constraints {
            assert!(c.satisfied_by(&w));
        }
        let recomputed: Rat = lp.objective.iter().zip(&w).map(|(c, v)| c * v).sum();
        assert_eq!(value, recomputed);
    }

    #[test]
    fn invariant_under_row_permutation_and_scaling() {
        let base = LinearProgram::all_nonneg(
            2,
            rats(&[1, 2]),
            vec![
                Constraint::ge(rats(&[3, 2]), rat(6)),
                Constraint::ge(rats(&[1, 4]), rat(4)),
            ],
        );
        let (v0, _) = lp_minimize(&base).unwrap().optimal().unwrap();
        let mut permuted = base.clone();
        permuted.constraints.reverse();
        let (v1, _) = lp_minimize(&permuted).unwrap().optimal().unwrap();
        assert_eq!(v0, v1);
        let mut scaled = base.clone();
        for c in scaled.constraints.iter_mut() {
            let factor = Rat::new(7, 3);
            for co in c.coeffs.iter_mut() {
                *co = &*co * &factor;
            }
            c.rhs = &c.rhs * &factor;
        }
        let (v2, _) = lp_minimize(&scaled).unwrap().optimal().unwrap();
        assert_eq!(v0, v2);
    }

    #[test]
    fn free_variables() {
        // min x  s.t. x >= -5 with x free  ->  -5
        let lp = LinearProgram {
            num_vars: 1,
            objective: rats(&[1]),
            constraints: vec![Constraint::ge(rats(&[1]), rat(-5))],
            nonneg: vec![false],
        };
        let (value, w) = lp_minimize(&lp).unwrap().optimal().unwrap();
        assert_eq!(value, rat(-5));
        assert_eq!(w, rats(&[-5]));
    }

    #[test]
    fn malformed_rejected() {
        let lp = LinearProgram::all_nonneg(2, rats(&[1]), vec![]);
        assert!(matches!(lp_minimize(&lp), Err(Error::MalformedProgram(_))));
        let lp = LinearProgram::all_nonneg(
            2,
            rats(&[1, 1]),
            vec![Constraint::ge(rats(&[1]), rat(0))],
        );
        assert!(matches!(lp_minimize(&lp), Err(Error::MalformedProgram(_))));
    }

    /// Independent oracle: enumerate candidate vertices by solving all
    /// square subsystems with exact Gaussian elimination.
    mod vertex_oracle {
        use super::*;

        /// Solves `A x = b` exactly; `None` when singular.
        pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
            let n = b.len();
            let mut m: Vec<Vec<Rat>> = a
                .iter()
                .zip(b)
                .map(|(row, rhs)| {
                    let mut r = row.clone();
                    r.push(rhs.clone());
                    r
                })
                .collect();
            for col in 0..n {
                let pivot_row = (col..n).find(|&r| !m[r][col].is_zero())?;
                m.swap(col, pivot_row);
                let pivot = m[col][col].clone();
                for v in m[col].iter_mut() {
                    *v = &*v / &pivot;
                }
                for r in 0..n {
                    if r != col && !m[r][col].is_zero() {
                        let f = m[r][col].clone();
                        for c in 0..=n {
                            let delta = &f * &m[col][c];
                            m[r][c] = &m[r][c] - &delta;
                        }
                    }
                }
            }
            Some(m.into_iter().map(|row| row[row.len() - 1].clone()).collect())
        }

        /// All vertices of the feasible region (bounded by rows plus
        /// coordinate planes), for num_vars <= 3.
        pub fn vertices(lp: &LinearProgram) -> Vec<Vec<Rat>> {
            let n = lp.num_vars;
            assert!(n <= 3);
            let mut planes: Vec<(Vec<Rat>, Rat)> = lp
                .constraints
                .iter()
                .map(|c| (c.coeffs.clone(), c.rhs.clone()))
                .collect();
            for i in 0..n {
                if lp.nonneg[i] {
                    let mut coeffs = vec![Rat::zero(); n];
                    coeffs[i] = Rat::one();
                    planes.push((coeffs, Rat::zero()));
                }
            }
            let mut out = Vec::new();
            let k = planes.len();
            let mut choose = vec![0usize; n];
            fn rec(
                planes: &[(Vec<Rat>, Rat)],
                lp: &LinearProgram,
                start: usize,
                depth: usize,
                choose: &mut Vec<usize>,
                out: &mut Vec<Vec<Rat>>,
                k: usize,
                n: usize,
            ) {
                if depth == n {
                    let a: Vec<Vec<Rat>> =
                        choose.iter().map(|&i| planes[i].0.clone()).collect();
                    let b: Vec<Rat> = choose.iter().map(|&i| planes[i].1.clone()).collect();
                    if let Some(x) = solve(&a, &b) {
                        let feasible = lp.constraints.iter().all(|c| c.satisfied_by(&x))
                            && (0..n).all(|i| !lp.nonneg[i] || !x[i].is_negative());
                        if feasible {
                            out.push(x);
                        }
                    }
                    return;
                }
                for i in start..k {
                    choose[depth] = i;
                    rec(planes, lp, i + 1, depth + 1, choose, out, k, n);
                }
            }
            rec(&planes, lp, 0, 0, &mut choose, &mut out, k, n);
            out
        }
    }

    #[test]
    fn duality_spot_check_against_vertex_enumeration() {
        let programs = vec![
            LinearProgram::all_nonneg(
                2,
                rats(&[1, 1]),
                vec![Constraint::ge(rats(&[3, 2]), rat(6))],
            ),
            LinearProgram::all_nonneg(
                2,
                rats(&[5, 4]),
                vec![
                    Constraint::ge(rats(&[3, 2]), rat(6)),
                    Constraint::ge(rats(&[1, 4]), rat(4)),
                ],
            ),
            LinearProgram::all_nonneg(
                3,
                rats(&[1, 2, 3]),
                vec![
                    Constraint::ge(rats(&[1, 1, 1]), rat(4)),
                    Constraint::ge(rats(&[2, 0, 1]), rat(3)),
                    Constraint::eq(rats(&[0, 1, 1]), rat(2)),
                ],
            ),
        ];
        for lp in &programs {
            let (value, _) = lp_minimize(lp).unwrap().optimal().expect("optimal");
            let vertices = vertex_oracle::vertices(lp);
            assert!(!vertices.is_empty());
            let best = vertices
                .iter()
                .map(|x| lp.objective.iter().zip(x).map(|(c, v)| c * v).sum::<Rat>())
                .min()
                .unwrap();
            assert_eq!(value, best, "simplex disagrees with vertex enumeration");
        }
    }
}
