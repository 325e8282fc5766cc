use k3blowup::algebra::{betti_numbers, homology};
use k3blowup::complex::simplex_boundary;
use k3blowup::construction::{k3_16, kummer_k4_16, reference_k3_17};
use num_bigint::BigInt;

#[test]
fn kummer_homology() {
    let k = kummer_k4_16();
    let h = homology(&k);
    assert_eq!(h.betti, vec![1, 0, 6, 0, 1]);
    assert_eq!(h.torsion[2], vec![BigInt::from(2); 5]);
    assert_eq!(h.to_string(), "(Z, 0, Z^6+(Z_2)^5, 0, Z)");
    assert_eq!(betti_numbers(&k, 2).unwrap(), vec![1, 0, 11, 5, 1]);
    assert_eq!(betti_numbers(&k, 3).unwrap(), vec![1, 0, 6, 0, 1]);
    assert_eq!(h.euler_characteristic(), 8);
}

#[test]
fn k3_homology() {
    for k in [k3_16(), reference_k3_17().unwrap()] {
        let h = homology(&k);
        assert_eq!(h.to_string(), "(Z, 0, Z^22, 0, Z)");
        assert_eq!(betti_numbers(&k, 2).unwrap(), h.betti);
    }
}

#[test]
fn universal_coefficients_and_euler() {
    for c in [kummer_k4_16(), k3_16(), simplex_boundary(6)] {
        let h = homology(&c);
        for p in [2u64, 3, 5] {
            let b = betti_numbers(&c, p).unwrap();
            assert_eq!(b, h.betti_mod(p));
            let chi: i64 = b.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum();
            assert_eq!(chi, c.euler_characteristic());
        }
    }
}
