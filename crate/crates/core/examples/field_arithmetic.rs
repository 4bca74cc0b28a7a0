//! Arithmetic in GF(9) = Z_3[X]/(X^2 + 1) and its GF(3) subfield.

use agcodes::gf::Field;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = Field::new(3, 2)?;
    println!("GF({}) with modulus {:?} (low degree first)", f.order(), f.modulus());

    let i = f.generator();
    let a = f.add(f.one(), i);
    println!("a = 1 + i has coefficients {:?}", f.coeffs(a));
    println!("a^2 = {:?}", f.coeffs(f.mul(a, a)));
    println!("a^-1 = {:?}", f.coeffs(f.inv(a)?));
    println!("a^3 (Frobenius over GF(3)) = {:?}", f.coeffs(f.frobenius(a, 3)?));

    let sub: Vec<u32> = f.elements().filter(|&x| f.in_subfield(x, 3).unwrap()).map(|x| x.index()).collect();
    println!("GF(3) inside GF(9): element indices {sub:?}");
    Ok(())
}
