//! Intersection numbers on B, on G(2,6) and on the incidence I.

use fano_chow::chow::{catalog, relative_canonical};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let b = catalog("B")?;
    println!("deg B = {}", b.class("h_3^4")?.integrate()?);
    println!("a_1.a_2 = {}", b.class("a_1*a_2")?.integrate()?);
    println!("2(a_1+..+a_4) - 3h_3^2 = {}", b.class("2*(a_1+a_2+a_3+a_4)-3*h_3^2")?);

    let g = catalog("G26")?;
    println!("[F_B].h_2^4 = {}", g.class("4*(h_2^2-c_2)^2*h_2^4")?.integrate()?);
    println!("Hilbert function of A(G(2,6)): {:?}", g.hilbert_function());

    let i = catalog("I")?;
    println!("omega_p1 = {}", relative_canonical(&i)?);
    println!("h_3'^4 on I = {}", i.class("h_3'^4")?.integrate()?);
    Ok(())
}
