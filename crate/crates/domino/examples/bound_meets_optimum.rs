//! Computes the double-Slater lower bound and the exact double domination
//! number of a 4-regular circulant, showing the bound is tight there.

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = domino::graph::circulant(30, &[1, 2])?;
    let bound = domino::slater::double_slater(&domino::graph::DegreeProfile::new(&g))?;
    let cert = domino::exact::gamma_ktuple_bnb(&g, 2)?;
    cert.validate(&g)?;
    println!(
        "n={} double-slater bound={} gamma_x2={} (branch nodes: {})",
        g.n(),
        bound,
        cert.value,
        cert.nodes
    );
    Ok(())
}
