//! Build F_9, look at its generator and check a few field identities.

use qcff::algebra::FieldCtx;

fn main() -> qcff::Result<()> {
    let ctx = FieldCtx::new(3, 2, Some(&[1, 0, 1]))?;
    println!(
        "F_{} = F_{}[x]/(x^2+1), gamma = {}",
        ctx.q(),
        ctx.p(),
        ctx.gamma()
    );

    for a in ctx.elements().filter(|a| !a.is_zero()) {
        let log = ctx.dlog(a)?;
        let inv = ctx.inv(a)?;
        println!(
            "  {a}: log {log}, inverse {inv}, a^w = {}",
            ctx.pow(a, ctx.w())
        );
        assert_eq!(ctx.gamma_pow(log as i64), a);
    }

    let default = FieldCtx::with_order(25)?;
    println!(
        "F_25 default modulus digits {:?}",
        default.modulus().unwrap()
    );
    Ok(())
}
