//! Ramification, group presentation and genus of a quasi-cyclotomic field.

use qcff::algebra::{FieldCtx, Poly};
use qcff::cyclotomic::{genus_k_closed, Conductor, ConductorInput};
use qcff::quasi::{
    genus_quasi, genus_quasi_assembly, presentation_from_table, ramification_table, PairSet,
};

fn main() -> qcff::Result<()> {
    let ctx = FieldCtx::with_order(5)?;
    let p = |s: &str| Poly::parse(s, &ctx);
    let c = Conductor::new(
        &ctx,
        ConductorInput::Factored(vec![(p("T")?, 1), (p("T+1")?, 1), (p("T^2+2")?, 1)]),
        0,
    )?;
    let ps = PairSet::new(&c, vec![(p("T")?, p("T+1")?), (p("T+1")?, p("T^2+2")?)])?;

    let rt = ramification_table(&ctx, &c, &ps)?;
    for e in &rt.entries {
        println!("{}: vbar {}, e {}", e.prime, e.vbar, e.e);
    }
    for par in &rt.parity {
        println!(
            "pair ({}, {}): radical {}",
            par.p,
            par.q,
            par.radical.label()
        );
    }

    let pres = presentation_from_table(&ctx, &c, &ps, &rt)?;
    println!("epsilon of order {}, central", pres.epsilon_order);
    for g in &pres.generators {
        println!("{} of order {}", g.name, g.lift_order);
    }
    for r in &pres.relations {
        println!("{r}");
    }
    println!("|G~| = {}", pres.group_order);

    let g_k = genus_k_closed(&ctx, &c)?;
    println!(
        "g_K = {g_k}, g_K~ = {} (Hasse), {} (Riemann-Hurwitz)",
        genus_quasi(&ctx, &c, &ps, &g_k, &rt)?,
        genus_quasi_assembly(&ctx, &c, &g_k, &rt)?
    );
    Ok(())
}
