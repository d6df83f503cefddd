//! The 8 x 8 product grid of the real basis `1, iI, jI, kI, i, j, k, I`.

use biquat::{basis_product, BasisElement};

fn main() {
    println!("{}", biquat::tables::render_basis_table());

    // every cell is one signed basis element; read a few directly
    for (a, b) in [
        (BasisElement::BivI, BasisElement::BivJ), // i * j
        (BasisElement::VecI, BasisElement::VecJ), // iI * jI
        (BasisElement::Pseudo, BasisElement::Pseudo), // I * I
        (BasisElement::VecI, BasisElement::BivI), // iI * i
    ] {
        let (sign, e) = basis_product(a, b);
        let sign = if sign < 0 { "-" } else { "" };
        println!("{} * {} = {}{}", a.symbol(), b.symbol(), sign, e.symbol());
    }

    // the vector directions square to +1, the bivector directions to -1
    for e in BasisElement::ALL {
        let (sign, sq) = basis_product(e, e);
        assert_eq!(sq, BasisElement::One);
        let expected = match e {
            BasisElement::One | BasisElement::VecI | BasisElement::VecJ | BasisElement::VecK => 1,
            _ => -1,
        };
        assert_eq!(sign, expected, "{} squared", e.symbol());
    }
    println!("\nsquares: 1, iI, jI, kI -> +1   i, j, k, I -> -1");
}
