//! Residue symbols, their Jacobi extension and the reciprocity law over F_3.

use qcff::algebra::{factor, FieldCtx, Poly};
use qcff::symbols::{jacobi_symbol, reciprocity_sides, residue_symbol};

fn main() -> qcff::Result<()> {
    let ctx = FieldCtx::with_order(3)?;
    let p = |s: &str| Poly::parse(s, &ctx);

    for (a, r) in [("T", "T+1"), ("T", "T^2+1"), ("T+2", "T^2+T+2")] {
        let s = residue_symbol(&ctx, &p(a)?, &p(r)?, true)?;
        println!("({a} / {r}) = {} (log {})", s.value, s.dlog);
    }

    let b = p("T^2+2")?;
    let fz = factor(&b, &ctx, 0)?;
    let j = jacobi_symbol(&ctx, &p("T")?, &b, &fz.factors)?;
    println!("(T / T^2+2) = {}", j.value);

    for (x, y) in [("T", "T+1"), ("T", "T^2+1"), ("T^2+1", "T^3+2*T+1")] {
        let sides = reciprocity_sides(&ctx, &p(x)?, &p(y)?)?;
        println!(
            "reciprocity {x}, {y}: {} = {} ({})",
            sides.lhs,
            sides.rhs,
            sides.holds()
        );
    }
    Ok(())
}
