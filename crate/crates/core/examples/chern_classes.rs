//! Chern classes of K on P^5 through Grothendieck-Riemann-Roch.

use fano_chow::chern::{grr_push_curve, hrr_chi, ChernCharacter};
use fano_chow::chow::catalog;
use fano_chow::poly::Poly;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p5 = catalog("P5")?;
    let h = p5.poly("H")?;
    let zero = Poly::zero(p5.signature());
    let w = ChernCharacter::of_lines(&p5, &[(6, &zero)])?;
    let l = ChernCharacter::of_lines(&p5, &[(2, &-&h), (2, &h)])?;
    let cubic = grr_push_curve(&p5, 0, &p5.class("3*H^4")?, 4)?;
    let k = w.sub(&l)?.add(&cubic)?;
    let c = k.to_bundle();
    for i in 1..=5 {
        println!("c_{i}(K) = {}", c.c(i));
    }
    println!("chi(K(2)) = {}", hrr_chi(&p5, &k.twist(&p5.poly("2*H")?)?)?);
    println!("chi(K) = {}", hrr_chi(&p5, &k)?);
    Ok(())
}
