use nalgebra::{dmatrix, DMatrix};

#[test]
fn probe_observer() {
    let a = dmatrix![0.0, 6.78, 1.29; 0.0, -2.24, 0.990; 0.0, -4.47, -0.902];
    let c1 = dmatrix![1.0, 0.0, 0.0; 0.0, 0.0, 1.0];
    let c2 = dmatrix![0.0, 0.0, 1.0; 1.0, 0.0, 0.0];
    let ls: Vec<(&str, DMatrix<f64>)> = vec![
        ("printed", dmatrix![3.16, 9.29; 2.69, 10.85; 0.947, 5.92]),
        ("colmajor", dmatrix![3.16, 10.85; 9.29, 0.947; 2.69, 5.92]),
        ("l11_0.316", dmatrix![0.316, 9.29; 2.69, 10.85; 0.947, 5.92]),
    ];
    for (name, l) in &ls {
        for (cn, c) in [("C_eI_q", &c1), ("C_q_eI", &c2)] {
            let m = &a - l * c;
            let e = m.complex_eigenvalues();
            println!("{name}/{cn}: {:?}", e.as_slice().iter().map(|z| (z.re, z.im)).collect::<Vec<_>>());
        }
    }
}
