//! The formal sum a_PQ of fractional classes mod PQ.

use qcff::algebra::{FieldCtx, Poly};
use qcff::quasi::{a_pq_formal, a_pq_raw_term_count};

fn main() -> qcff::Result<()> {
    for (q, p, r) in [(3, "T", "T+1"), (5, "T", "T+1"), (3, "T", "T^2+1")] {
        let ctx = FieldCtx::with_order(q)?;
        let sum = a_pq_formal(&ctx, &Poly::parse(p, &ctx)?, &Poly::parse(r, &ctx)?)?;
        println!("q={q} a_PQ for ({p}, {r}): {sum}");
        println!(
            "  {} raw terms (formula {}), {} distinct classes",
            sum.raw_terms(),
            a_pq_raw_term_count(q, 1, Poly::parse(r, &ctx)?.deg()),
            sum.terms().len()
        );
    }
    Ok(())
}
