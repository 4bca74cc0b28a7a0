//! Weierstrass gaps at infinity and monomial bases of L(sP∞).

use agcodes::rr;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (q, m) = (5, 4);
    let gaps = rr::gaps(q, m)?;
    println!("gaps of <{q}, {m}>: {gaps:?} (genus {})", gaps.len());

    for s in [-1, 0, 5, 12, 20] {
        let b = rr::basis(q, m, s);
        let monomials: Vec<String> = b.entries.iter().map(|e| format!("x^{}y^{}", e.i, e.j)).collect();
        println!("L({s}P): dim {}  {}", rr::dimension(q, m, s), monomials.join(" "));
    }
    Ok(())
}
