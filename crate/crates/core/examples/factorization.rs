//! Factor polynomials over F_3 and F_9 and certify the result.

use qcff::algebra::{factor, monic_irreducibles, FieldCtx, Poly};

fn main() -> qcff::Result<()> {
    let f3 = FieldCtx::with_order(3)?;
    for text in ["T^3+2*T", "T^9+2*T", "2*T^6+T^3+2", "T^4+T^2+1"] {
        let f = Poly::parse(text, &f3)?;
        let fz = factor(&f, &f3, 0)?;
        let parts: Vec<String> = fz
            .factors
            .iter()
            .map(|pp| format!("({})^{}", pp.prime, pp.exp))
            .collect();
        println!("{f} = {} * {}", fz.leading, parts.join(" "));
        assert_eq!(fz.expand(&f3), f);
    }

    let f9 = FieldCtx::with_order(9)?;
    let f = Poly::parse("T^2+1", &f9)?;
    println!("over F_9: T^2+1 irreducible? {}", f.is_irreducible(&f9)?);

    for d in 1..=4 {
        println!(
            "monic irreducibles of degree {d} over F_3: {}",
            monic_irreducibles(&f3, d).len()
        );
    }
    Ok(())
}
