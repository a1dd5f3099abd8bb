//! Gröbner basis and Hilbert polynomial of the twisted cubic.

use fano_chow::poly::{hilbert_polynomial, GroebnerBasis, Poly, Signature};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let sig = Signature::new(["x", "y", "z", "w"].map(|v| (v, 1)))?;
    let gens = ["x*z-y^2", "y*w-z^2", "x*w-y*z"].map(|s| Poly::parse(s, &sig)).into_iter().collect::<Result<Vec<_>, _>>()?;
    let gb = GroebnerBasis::compute(&sig, &gens)?;
    for g in gb.polys() {
        println!("{g}");
    }
    println!("Hilbert polynomial: {}", hilbert_polynomial(&gb).expect("standard grading"));
    Ok(())
}
