//! The net beta: constant rank certificate and the quasimonad.

use fano_chow::pencil::{constant_rank_certificate, flatten_rank, flattening, quasimonad_checks, SkewPencil};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let beta = SkewPencil::beta();
    print!("{}", beta.to_text());
    println!("{}", constant_rank_certificate(&beta)?);
    println!("rank of flattening = {}", flatten_rank(&flattening()));
    println!("{}", quasimonad_checks(7, 5, Some(8))?);
    Ok(())
}
