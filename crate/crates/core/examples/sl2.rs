//! SL_2 bookkeeping for the sections of E(1).

use fano_chow::rep::{euler_solve, SL2Rep, Term};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let l = SL2Rep::l();
    let w = SL2Rep::from_parts(&[2, 2]);
    let lw = l.tensor(&w);
    println!("L (x) W = {lw}");
    let v = lw.minus(&SL2Rep::from_parts(&[1, 3])).expect("contained");
    println!("V = {v}, dim {}", v.dim());
    let ext = euler_solve(&[Term::Dim(1), Term::Known(l.tensor(&v)), Term::Known(SL2Rep::from_parts(&[2, 2, 4])), Term::Unknown])?;
    println!("dim Ext^1 = {ext}");
    Ok(())
}
