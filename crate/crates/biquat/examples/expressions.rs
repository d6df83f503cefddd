//! The expression language: units as letters, juxtaposition as product,
//! functions for everything the library computes.

use biquat::expr::{evaluate, parse, Builtin};
use biquat::Tolerance;

fn main() {
    let tol = Tolerance::default();
    let show = |text: &str| match evaluate(text, tol) {
        Ok(v) => println!("{text:<28} = {v}"),
        Err(e) => println!("{text:<28} ! {e}"),
    };

    // literals, units, juxtaposition; I commutes, i j k do not
    show("1 + 2i + 3Ij");
    show("2Ii * 3j");
    show("iI - Ii");
    show("(i + Ij)^2");
    show("1/(2 + Ii)");

    // functions cover conjugates, norms, grade projections and division
    show("conj(i + 2j)");
    show("norm(1 + Ii)");
    show("inner(i + Ij, i)");
    show("wedge(Ii, Ij)");
    show("dual(i)");
    show("exp(3.14159265358979 i)");
    show("gbivector(1 + 2Ii + 3j + I)");
    show("ldiv(j, k)");

    // errors carry the offending span
    show("2 +");
    show("conj(");
    show("walrus(1)");
    show("1/(i + Ij)");

    // the parser's output prints back to the same string it came from
    let e = parse("1 + 2i*conj(j) - (k/2)^3").unwrap();
    let printed = e.to_string();
    println!("\nparsed and reprinted: {printed}");
    assert!(parse(&printed).unwrap().structure_eq(&e));

    println!("\nbuiltins:");
    for b in Builtin::ALL {
        print!("  {}/{}", b.name(), b.arity());
    }
    println!();
}
