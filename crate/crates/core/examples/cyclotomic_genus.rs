//! Galois structure, different and genus of the cyclotomic field K_M.

use qcff::algebra::{FieldCtx, Poly};
use qcff::cyclotomic::{
    different_data, galois_structure, genus_k_assembly, genus_k_closed, Conductor,
};

fn main() -> qcff::Result<()> {
    for (q, m) in [
        (3, "T"),
        (3, "T^2+T"),
        (3, "T^2+1"),
        (5, "T^3"),
        (3, "T^4+T^2"),
    ] {
        let ctx = FieldCtx::with_order(q)?;
        let c = Conductor::from_poly(&ctx, &Poly::parse(m, &ctx)?)?;
        let gs = galois_structure(&c);
        let dd = different_data(&ctx, &c);
        let parts: Vec<String> = gs.cyclic_parts.iter().map(|x| x.to_string()).collect();
        println!("q={q} M={m}: Phi = {}", c.phi());
        println!(
            "  G = [{}] x (p-part of order {})",
            parts.join(", "),
            gs.p_part_order
        );
        for l in &dd.local {
            println!("  different at {}: {}", l.prime, l.s);
        }
        println!(
            "  {} infinite primes, coefficient {}",
            dd.infinite_count, dd.infinite_coeff
        );
        println!(
            "  g_K = {} (closed), {} (Riemann-Hurwitz)",
            genus_k_closed(&ctx, &c)?,
            genus_k_assembly(&ctx, &c)?
        );
    }
    Ok(())
}
