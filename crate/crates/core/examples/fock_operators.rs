//! Truncated ladder operators, their k-th powers and the two pseudo-inverses of (a†)^k.

use kphoton_jc::fock::{FockSpace, Ladder, Ordering};

fn main() -> kphoton_jc::Result<()> {
    let dim = 8;
    let k = 2;
    let space = FockSpace::new(dim)?;

    let comm = space.annihilation().commutator(&space.creation());
    let diag: Vec<f64> = comm.diagonal().iter().map(|z| z.re).collect();
    println!("diag [a, a†] for dim {dim}: {diag:?}  (last entry is the truncation artefact)");

    let product = space.antinormal_product(k)?;
    println!("a^{k} (a†)^{k}, exact for n in {:?}:", product.exact);
    for n in 0..dim {
        let flag = if product.is_exact_at(n) { "" } else { "  <- truncated" };
        println!("  n = {n}: {:>8.3}{flag}", product.matrix[(n, n)].re);
    }

    let adk = space.ladder_power(k, Ladder::Creation)?;
    for ordering in [Ordering::AntiNormal, Ordering::Normal] {
        let p = space.pseudo_inverse_creation(k, ordering)?;
        let left = &p.matrix * &adk;
        let right = &adk * &p.matrix;
        let l: Vec<f64> = (0..dim).map(|n| left[(n, n)].re).collect();
        let r: Vec<f64> = (0..dim).map(|n| right[(n, n)].re).collect();
        println!("{ordering:?}: diag P(a†)^k = {l:?}");
        println!("{:width$}  diag (a†)^k P = {r:?}", "", width = format!("{ordering:?}").len());
    }
    Ok(())
}
