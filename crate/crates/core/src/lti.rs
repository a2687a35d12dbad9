//! State-space containers and core linear-algebra contracts.
//!
//! Everything here is dense and sized for control-design problems
//! (state dimensions up to a few tens), not for large-scale work.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::{Error, Result};

/// Default tolerance below which a real part is treated as zero when
/// classifying eigenvalues. Strict stability requires `Re < -tol`.
pub const TOL_HURWITZ: f64 = 1e-9;

/// Relative singular-value cutoff for rank decisions.
pub const TOL_RANK: f64 = 1e-10;

/// Continuous-time LTI plant with a designated limited output `y_lim = C_lim x`.
///
/// `B_dist` routes an exogenous disturbance into the state equation; it
/// defaults to an `n x 0` matrix when the plant has no disturbance channel.
#[derive(Debug, Clone, PartialEq)]
pub struct Plant {
    pub a: DMatrix<f64>,
    pub b: DMatrix<f64>,
    pub c: DMatrix<f64>,
    pub d: DMatrix<f64>,
    pub c_lim: DMatrix<f64>,
    pub b_dist: DMatrix<f64>,
}

impl Plant {
    /// Builds a plant without a disturbance channel.
    pub fn new(
        a: DMatrix<f64>,
        b: DMatrix<f64>,
        c: DMatrix<f64>,
        d: DMatrix<f64>,
        c_lim: DMatrix<f64>,
    ) -> Result<Self> {
        let n = a.nrows();
        let b_dist = DMatrix::zeros(n, 0);
        Self::with_disturbance(a, b, c, d, c_lim, b_dist)
    }

    /// Builds a plant with an explicit disturbance input matrix.
    pub fn with_disturbance(
        a: DMatrix<f64>,
        b: DMatrix<f64>,
        c: DMatrix<f64>,
        d: DMatrix<f64>,
        c_lim: DMatrix<f64>,
        b_dist: DMatrix<f64>,
    ) -> Result<Self> {
        let n = a.nrows();
        if a.ncols() != n {
            return Err(Error::Dimension(format!(
                "A must be square, got {}x{}",
                a.nrows(),
                a.ncols()
            )));
        }
        if b.nrows() != n {
            return Err(Error::Dimension(format!(
                "B must have {} rows, got {}",
                n,
                b.nrows()
            )));
        }
        let m = b.ncols();
        if c.ncols() != n {
            return Err(Error::Dimension(format!(
                "C must have {} columns, got {}",
                n,
                c.ncols()
            )));
        }
        let n_y = c.nrows();
        if d.nrows() != n_y || d.ncols() != m {
            return Err(Error::Dimension(format!(
                "D must be {}x{}, got {}x{}",
                n_y,
                m,
                d.nrows(),
                d.ncols()
            )));
        }
        if c_lim.ncols() != n {
            return Err(Error::Dimension(format!(
                "C_lim must have {} columns, got {}",
                n,
                c_lim.ncols()
            )));
        }
        if b_dist.nrows() != n {
            return Err(Error::Dimension(format!(
                "B_dist must have {} rows, got {}",
                n,
                b_dist.nrows()
            )));
        }
        for (name, mat) in [
            ("A", &a),
            ("B", &b),
            ("C", &c),
            ("D", &d),
            ("C_lim", &c_lim),
            ("B_dist", &b_dist),
        ] {
            if mat.iter().any(|v| !v.is_finite()) {
                return Err(Error::NonFinite(name.to_string()));
            }
        }
        Ok(Self {
            a,
            b,
            c,
            d,
            c_lim,
            b_dist,
        })
    }

    /// State dimension.
    pub fn n(&self) -> usize {
        self.a.nrows()
    }

    /// Input dimension.
    pub fn m(&self) -> usize {
        self.b.ncols()
    }

    /// Measured-output dimension.
    pub fn n_y(&self) -> usize {
        self.c.nrows()
    }

    /// Limited-output dimension.
    pub fn m_lim(&self) -> usize {
        self.c_lim.nrows()
    }

    /// Disturbance-input dimension.
    pub fn n_d(&self) -> usize {
        self.b_dist.ncols()
    }

    /// The augmentation design requires a square constraint-to-input map.
    pub fn require_square_limits(&self) -> Result<()> {
        if self.m_lim() != self.m() {
            return Err(Error::Dimension(format!(
                "augmentation design needs m_lim = m, got m_lim = {}, m = {}",
                self.m_lim(),
                self.m()
            )));
        }
        Ok(())
    }
}

/// Eigenvalue summary of a square real matrix.
#[derive(Debug, Clone)]
pub struct EigenReport {
    pub eigenvalues: Vec<Complex64>,
    pub max_real_part: f64,
    pub hurwitz: bool,
    /// Tolerance the `hurwitz` flag was evaluated against.
    pub tol: f64,
}

impl EigenReport {
    /// True when the spectral abscissa sits inside the `[-tol, tol]` band:
    /// the matrix is neither strictly stable nor strictly unstable.
    pub fn marginal(&self) -> bool {
        self.max_real_part.abs() <= self.tol
    }
}

/// Eigenvalues with multiplicity plus a strict-Hurwitz classification.
pub fn eigen_report(m: &DMatrix<f64>, tol_hurwitz: f64) -> Result<EigenReport> {
    if m.nrows() != m.ncols() {
        return Err(Error::Dimension(format!(
            "eigen_report needs a square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    if m.iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite("eigen_report input".into()));
    }
    let eigs = m.complex_eigenvalues();
    let mut eigenvalues: Vec<Complex64> = eigs.iter().copied().collect();
    // Deterministic ordering: by real part, then imaginary part.
    eigenvalues.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    let max_real_part = eigenvalues
        .iter()
        .map(|l| l.re)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(EigenReport {
        eigenvalues,
        max_real_part,
        hurwitz: max_real_part < -tol_hurwitz,
        tol: tol_hurwitz,
    })
}

/// Numerical rank via SVD with a relative singular-value cutoff.
fn rank_complex(m: &DMatrix<Complex64>, tol_rank: f64) -> usize {
    let svd = m.clone().svd(false, false);
    let smax = svd.singular_values.iter().cloned().fold(0.0_f64, f64::max);
    if smax == 0.0 {
        return 0;
    }
    svd.singular_values
        .iter()
        .filter(|&&s| s > tol_rank * smax)
        .count()
}

fn to_complex(m: &DMatrix<f64>) -> DMatrix<Complex64> {
    m.map(|v| Complex64::new(v, 0.0))
}

/// PBH tests for stabilizability of `(A, B)` and observability of `(A, C)`.
///
/// Stabilizability checks `rank [lambda I - A, B] = n` at every eigenvalue
/// with nonnegative real part; observability checks the dual rank condition
/// at every eigenvalue of `A`.
pub fn pbh_check(plant: &Plant, tol_rank: f64) -> Result<(bool, bool)> {
    let n = plant.n();
    let a_c = to_complex(&plant.a);
    let b_c = to_complex(&plant.b);
    let ct_c = to_complex(&plant.c.transpose());
    let at_c = a_c.transpose();
    let eigs = eigen_report(&plant.a, TOL_HURWITZ)?;

    let mut stabilizable = true;
    let mut observable = true;
    for lambda in &eigs.eigenvalues {
        let shift = DMatrix::from_diagonal_element(n, n, *lambda);
        if lambda.re >= 0.0 {
            let mut pencil = DMatrix::zeros(n, n + plant.m());
            pencil.view_mut((0, 0), (n, n)).copy_from(&(&shift - &a_c));
            pencil.view_mut((0, n), (n, plant.m())).copy_from(&b_c);
            if rank_complex(&pencil, tol_rank) < n {
                stabilizable = false;
            }
        }
        let mut pencil = DMatrix::zeros(n, n + plant.n_y());
        pencil
            .view_mut((0, 0), (n, n))
            .copy_from(&(&shift - &at_c));
        pencil
            .view_mut((0, n), (n, plant.n_y()))
            .copy_from(&ct_c);
        if rank_complex(&pencil, tol_rank) < n {
            observable = false;
        }
    }
    Ok((stabilizable, observable))
}

/// One classical fourth-order Runge-Kutta step for `x' = f(t, x)`.
pub fn rk4_step<F>(f: &F, x: &DVector<f64>, t: f64, h: f64) -> Result<DVector<f64>>
where
    F: Fn(f64, &DVector<f64>) -> DVector<f64>,
{
    debug_assert!(h > 0.0);
    let check = |k: &DVector<f64>| -> Result<()> {
        if k.iter().any(|v| !v.is_finite()) {
            Err(Error::BlowUp { t })
        } else {
            Ok(())
        }
    };
    let k1 = f(t, x);
    check(&k1)?;
    let k2 = f(t + 0.5 * h, &(x + &k1 * (0.5 * h)));
    check(&k2)?;
    let k3 = f(t + 0.5 * h, &(x + &k2 * (0.5 * h)));
    check(&k3)?;
    let k4 = f(t + h, &(x + &k3 * h));
    check(&k4)?;
    Ok(x + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0))
}

/// Matrix exponential `e^(M t)` by scaling and squaring.
pub fn expm(m: &DMatrix<f64>, t: f64) -> DMatrix<f64> {
    (m * t).exp()
}
