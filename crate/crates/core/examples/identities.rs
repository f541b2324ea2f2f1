//! Check identities in the varieties of adequate, left adequate and right
//! adequate monoids.

use adequate::{check_identity_str, Mode};

fn main() -> Result<(), adequate::Error> {
    let cases = [
        (Mode::ADEQUATE_MONOID, "(x)+(y)+", "(y)+(x)+"),
        (Mode::ADEQUATE_MONOID, "(xy)+", "(x(y)+)+"),
        (Mode::ADEQUATE_MONOID, "(xy)+", "(x)+(y)+"),
        (Mode::ADEQUATE_SEMIGROUP, "((x)+y)+", "(x)+(y)+"),
        (Mode::LEFT_MONOID, "(xy)*", "((x)*y)*"),
        (Mode::RIGHT_MONOID, "(x)+x", "x"),
    ];
    for (mode, lhs, rhs) in cases {
        let holds = check_identity_str(lhs, rhs, mode)?;
        println!("{:<22} {lhs} = {rhs}: {holds}", mode.name());
    }
    Ok(())
}
