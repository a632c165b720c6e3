fn main() {
    // BLAS/LAPACK primitives (zgemm, zgesv, zheev, zgesdd) come from the
    // system OpenBLAS, which bundles LAPACK.
    println!("cargo:rustc-link-lib=dylib=openblas");
}
