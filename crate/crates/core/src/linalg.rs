//! Dense complex linear algebra on top of the system BLAS/LAPACK.
//!
//! Only the four primitives the engine needs are wrapped (general matrix
//! product, LU solve, Hermitian eigendecomposition, SVD), plus a matrix
//! exponential built on them following Higham's scaling-and-squaring method
//! (SIAM J. Matrix Anal. Appl. 26(4), 2005).

use crate::error::{Error, Result};
use ndarray::prelude::*;
use num_complex::Complex64;
use std::ffi::c_char;

#[allow(non_camel_case_types)]
type c_int = i32;

const CBLAS_ROW_MAJOR: c_int = 101;
const CBLAS_NO_TRANS: c_int = 111;
const CBLAS_TRANS: c_int = 112;
const CBLAS_CONJ_TRANS: c_int = 113;

extern "C" {
    fn cblas_zgemm(
        layout: c_int,
        trans_a: c_int,
        trans_b: c_int,
        m: c_int,
        n: c_int,
        k: c_int,
        alpha: *const Complex64,
        a: *const Complex64,
        lda: c_int,
        b: *const Complex64,
        ldb: c_int,
        beta: *const Complex64,
        c: *mut Complex64,
        ldc: c_int,
    );
    fn zgesv_(
        n: *const c_int,
        nrhs: *const c_int,
        a: *mut Complex64,
        lda: *const c_int,
        ipiv: *mut c_int,
        b: *mut Complex64,
        ldb: *const c_int,
        info: *mut c_int,
    );
    fn zheev_(
        jobz: *const c_char,
        uplo: *const c_char,
        n: *const c_int,
        a: *mut Complex64,
        lda: *const c_int,
        w: *mut f64,
        work: *mut Complex64,
        lwork: *const c_int,
        rwork: *mut f64,
        info: *mut c_int,
    );
    fn zgesdd_(
        jobz: *const c_char,
        m: *const c_int,
        n: *const c_int,
        a: *mut Complex64,
        lda: *const c_int,
        s: *mut f64,
        u: *mut Complex64,
        ldu: *const c_int,
        vt: *mut Complex64,
        ldvt: *const c_int,
        work: *mut Complex64,
        lwork: *const c_int,
        rwork: *mut f64,
        iwork: *mut c_int,
        info: *mut c_int,
    );
}

/// How an operand enters a matrix product.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Op {
    None,
    Transpose,
    ConjTranspose,
}

impl Op {
    fn cblas(self) -> c_int {
        match self {
            Op::None => CBLAS_NO_TRANS,
            Op::Transpose => CBLAS_TRANS,
            Op::ConjTranspose => CBLAS_CONJ_TRANS,
        }
    }
}

/// C = op(A) · op(B).
pub fn gemm(
    a: &Array2<Complex64>,
    op_a: Op,
    b: &Array2<Complex64>,
    op_b: Op,
) -> Array2<Complex64> {
    let (am, ak) = match op_a {
        Op::None => a.dim(),
        _ => (a.ncols(), a.nrows()),
    };
    let (bk, bn) = match op_b {
        Op::None => b.dim(),
        _ => (b.ncols(), b.nrows()),
    };
    assert_eq!(ak, bk, "inner dimensions must agree");

    let a_std = a.as_standard_layout();
    let b_std = b.as_standard_layout();
    let mut c = Array2::<Complex64>::zeros((am, bn));
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    unsafe {
        cblas_zgemm(
            CBLAS_ROW_MAJOR,
            op_a.cblas(),
            op_b.cblas(),
            am as c_int,
            bn as c_int,
            ak as c_int,
            &one,
            a_std.as_ptr(),
            a.ncols() as c_int,
            b_std.as_ptr(),
            b.ncols() as c_int,
            &zero,
            c.as_mut_ptr(),
            bn as c_int,
        );
    }
    c
}

/// C = A · B.
pub fn matmul(a: &Array2<Complex64>, b: &Array2<Complex64>) -> Array2<Complex64> {
    gemm(a, Op::None, b, Op::None)
}

/// Column-major copy of a row-major matrix (LAPACK input layout).
fn to_col_major(a: &Array2<Complex64>) -> Vec<Complex64> {
    let mut buf = Vec::with_capacity(a.len());
    for j in 0..a.ncols() {
        for i in 0..a.nrows() {
            buf.push(a[[i, j]]);
        }
    }
    buf
}

fn from_col_major(buf: &[Complex64], rows: usize, cols: usize) -> Array2<Complex64> {
    let mut out = Array2::zeros((rows, cols));
    for j in 0..cols {
        for i in 0..rows {
            out[[i, j]] = buf[j * rows + i];
        }
    }
    out
}

/// Solve A · X = B for X (A square, general complex).
pub fn solve(a: &Array2<Complex64>, b: &Array2<Complex64>) -> Result<Array2<Complex64>> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "solve requires a square matrix");
    assert_eq!(n, b.nrows(), "rhs row count must match");
    let nrhs = b.ncols();

    let mut a_f = to_col_major(a);
    let mut b_f = to_col_major(b);
    let mut ipiv = vec![0 as c_int; n];
    let mut info: c_int = 0;
    let n_i = n as c_int;
    let nrhs_i = nrhs as c_int;
    unsafe {
        zgesv_(
            &n_i,
            &nrhs_i,
            a_f.as_mut_ptr(),
            &n_i,
            ipiv.as_mut_ptr(),
            b_f.as_mut_ptr(),
            &n_i,
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Numeric {
            section: None,
            message: format!("zgesv failed with info = {info}"),
        });
    }
    Ok(from_col_major(&b_f, n, nrhs))
}

/// Eigendecomposition of a Hermitian matrix: returns ascending real
/// eigenvalues and the matrix whose columns are the eigenvectors.
pub fn eigh(a: &Array2<Complex64>) -> Result<(Array1<f64>, Array2<Complex64>)> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "eigh requires a square matrix");
    let mut a_f = to_col_major(a);
    let mut w = vec![0.0f64; n];
    let mut rwork = vec![0.0f64; (3 * n).max(1)];
    let n_i = n as c_int;
    let mut info: c_int = 0;
    let jobz = b'V' as c_char;
    let uplo = b'L' as c_char;

    // workspace query
    let mut work_query = [Complex64::new(0.0, 0.0)];
    let lwork_query: c_int = -1;
    unsafe {
        zheev_(
            &jobz,
            &uplo,
            &n_i,
            a_f.as_mut_ptr(),
            &n_i,
            w.as_mut_ptr(),
            work_query.as_mut_ptr(),
            &lwork_query,
            rwork.as_mut_ptr(),
            &mut info,
        );
    }
    let lwork = work_query[0].re as usize;
    let lwork = lwork.max(2 * n).max(1);
    let mut work = vec![Complex64::new(0.0, 0.0); lwork];
    let lwork_i = lwork as c_int;
    unsafe {
        zheev_(
            &jobz,
            &uplo,
            &n_i,
            a_f.as_mut_ptr(),
            &n_i,
            w.as_mut_ptr(),
            work.as_mut_ptr(),
            &lwork_i,
            rwork.as_mut_ptr(),
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Numeric {
            section: None,
            message: format!("zheev failed with info = {info}"),
        });
    }
    Ok((Array1::from(w), from_col_major(&a_f, n, n)))
}

/// Singular value decomposition A = U · diag(s) · Vᴴ.
///
/// Returns (U, s, Vᴴ) with s sorted descending.
pub fn svd(a: &Array2<Complex64>) -> Result<(Array2<Complex64>, Array1<f64>, Array2<Complex64>)> {
    let (m, n) = a.dim();
    let k = m.min(n);
    let mut a_f = to_col_major(a);
    let mut s = vec![0.0f64; k];
    let mut u = vec![Complex64::new(0.0, 0.0); m * m];
    let mut vt = vec![Complex64::new(0.0, 0.0); n * n];
    let mx = m.max(n);
    let mut rwork = vec![0.0f64; (5 * k * k + 7 * k).max(2 * mx * k + 2 * k * k + k).max(1)];
    let mut iwork = vec![0 as c_int; 8 * k];
    let m_i = m as c_int;
    let n_i = n as c_int;
    let mut info: c_int = 0;
    let jobz = b'A' as c_char;

    let mut work_query = [Complex64::new(0.0, 0.0)];
    let lwork_query: c_int = -1;
    unsafe {
        zgesdd_(
            &jobz,
            &m_i,
            &n_i,
            a_f.as_mut_ptr(),
            &m_i,
            s.as_mut_ptr(),
            u.as_mut_ptr(),
            &m_i,
            vt.as_mut_ptr(),
            &n_i,
            work_query.as_mut_ptr(),
            &lwork_query,
            rwork.as_mut_ptr(),
            iwork.as_mut_ptr(),
            &mut info,
        );
    }
    let lwork = (work_query[0].re as usize).max(1);
    let mut work = vec![Complex64::new(0.0, 0.0); lwork];
    let lwork_i = lwork as c_int;
    unsafe {
        zgesdd_(
            &jobz,
            &m_i,
            &n_i,
            a_f.as_mut_ptr(),
            &m_i,
            s.as_mut_ptr(),
            u.as_mut_ptr(),
            &m_i,
            vt.as_mut_ptr(),
            &n_i,
            work.as_mut_ptr(),
            &lwork_i,
            rwork.as_mut_ptr(),
            iwork.as_mut_ptr(),
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::Numeric {
            section: None,
            message: format!("zgesdd failed with info = {info}"),
        });
    }
    Ok((
        from_col_major(&u, m, m),
        Array1::from(s),
        from_col_major(&vt, n, n),
    ))
}

/// 1-norm (maximum absolute column sum).
pub fn one_norm(a: &Array2<Complex64>) -> f64 {
    let mut max = 0.0f64;
    for j in 0..a.ncols() {
        let col_sum: f64 = a.column(j).iter().map(|z| z.norm()).sum();
        max = max.max(col_sum);
    }
    max
}

/// Frobenius norm.
pub fn fro_norm(a: &Array2<Complex64>) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest entry magnitude.
pub fn max_norm(a: &Array2<Complex64>) -> f64 {
    a.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// ‖a − b‖_F / ‖b‖_F.
pub fn rel_l2_diff(a: &Array2<Complex64>, b: &Array2<Complex64>) -> f64 {
    let diff = a - b;
    fro_norm(&diff) / fro_norm(b)
}

pub fn identity(n: usize) -> Array2<Complex64> {
    Array2::from_diag_elem(n, Complex64::new(1.0, 0.0))
}

// Padé coefficient tables and 1-norm thresholds from Higham (2005), Table 10.2.
const THETA_3: f64 = 1.495585217958292e-2;
const THETA_5: f64 = 2.539398330063230e-1;
const THETA_7: f64 = 9.504178996162932e-1;
const THETA_9: f64 = 2.097847961257068e0;
const THETA_13: f64 = 5.371920351148152e0;

const B3: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
const B5: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
const B7: [f64; 8] = [
    17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0,
];
const B9: [f64; 10] = [
    17643225600.0,
    8821612800.0,
    2075673600.0,
    302702400.0,
    30270240.0,
    2162160.0,
    110880.0,
    3960.0,
    90.0,
    1.0,
];
const B13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Evaluate a low-degree diagonal Padé approximant from precomputed even
/// powers of A, returning (U, V) with exp(A) ≈ (V − U)⁻¹(V + U).
fn pade_low(
    a: &Array2<Complex64>,
    powers: &[&Array2<Complex64>],
    b: &[f64],
) -> (Array2<Complex64>, Array2<Complex64>) {
    let n = a.nrows();
    let eye = identity(n);
    // odd coefficients pair with A · (even polynomial)
    let mut u_poly = &eye * c(b[1]);
    let mut v = &eye * c(b[0]);
    for (k, p) in powers.iter().enumerate() {
        u_poly = u_poly + *p * c(b[2 * k + 3]);
        v = v + *p * c(b[2 * k + 2]);
    }
    (matmul(a, &u_poly), v)
}

/// Matrix exponential of a general complex square matrix.
pub fn expm(a: &Array2<Complex64>) -> Result<Array2<Complex64>> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "expm requires a square matrix");
    if n == 0 {
        return Ok(Array2::zeros((0, 0)));
    }

    let norm = one_norm(a);
    if !norm.is_finite() {
        return Err(Error::Numeric {
            section: None,
            message: "expm input contains non-finite entries".into(),
        });
    }

    let (u, v, squarings) = if norm <= THETA_9 {
        let a2 = matmul(a, a);
        if norm <= THETA_3 {
            let (u, v) = pade_low(a, &[&a2], &B3);
            (u, v, 0u32)
        } else if norm <= THETA_5 {
            let a4 = matmul(&a2, &a2);
            let (u, v) = pade_low(a, &[&a2, &a4], &B5);
            (u, v, 0)
        } else if norm <= THETA_7 {
            let a4 = matmul(&a2, &a2);
            let a6 = matmul(&a2, &a4);
            let (u, v) = pade_low(a, &[&a2, &a4, &a6], &B7);
            (u, v, 0)
        } else {
            let a4 = matmul(&a2, &a2);
            let a6 = matmul(&a2, &a4);
            let a8 = matmul(&a4, &a4);
            let (u, v) = pade_low(a, &[&a2, &a4, &a6, &a8], &B9);
            (u, v, 0)
        }
    } else {
        let s = ((norm / THETA_13).log2().ceil()).max(0.0) as u32;
        let scaled = a * c((0.5f64).powi(s as i32));
        let a2 = matmul(&scaled, &scaled);
        let a4 = matmul(&a2, &a2);
        let a6 = matmul(&a2, &a4);
        let eye = identity(n);

        let w1 = &a6 * c(B13[13]) + &a4 * c(B13[11]) + &a2 * c(B13[9]);
        let w2 = matmul(&w1, &a6)
            + &a6 * c(B13[7])
            + &a4 * c(B13[5])
            + &a2 * c(B13[3])
            + &eye * c(B13[1]);
        let u = matmul(&scaled, &w2);

        let z1 = &a6 * c(B13[12]) + &a4 * c(B13[10]) + &a2 * c(B13[8]);
        let v = matmul(&z1, &a6)
            + &a6 * c(B13[6])
            + &a4 * c(B13[4])
            + &a2 * c(B13[2])
            + &eye * c(B13[0]);
        (u, v, s)
    };

    let num = &v + &u;
    let den = &v - &u;
    let mut result = solve(&den, &num)?;
    for _ in 0..squarings {
        result = matmul(&result, &result);
    }
    Ok(result)
}
