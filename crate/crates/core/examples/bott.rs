//! Cohomology of homogeneous line bundles on the isotropic flag variety.

use fano_chow::bott::{cohomology, WeightC3, RESOLUTION_WEIGHTS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for w in RESOLUTION_WEIGHTS {
        let w = WeightC3::new(w[0], w[1], w[2])?;
        println!("{w}: {:?}", cohomology(&w));
    }
    let k: WeightC3 = "-4,-4,-4".parse()?;
    println!("{k}: {:?}", cohomology(&k));
    Ok(())
}
