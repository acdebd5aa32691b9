use maeda_core::arith::*;
use maeda_core::modsym::*;

fn main() {
    for k in [2u32, 4, 6, 8] {
        let s = build_space(11, k);
        let ns = new_subspace(&s);
        let w = atkin_lehner(&s, &ns, 11).unwrap().matrix;
        let u11 = restrict_to_new(&s, &ns, &hecke_ambient(&s, 11).unwrap());
        // newform theory at prime level: U_N = -w * N^(k/2-1) on each orbit,
        // so W must equal -U11 / 11^(k/2-1)
        let scale = rational::Rational::new(num_bigint::BigInt::from(-1), num_bigint::BigInt::from(11u32).pow(k / 2 - 1));
        let w_from_u = u11.scale(&scale);
        println!("(11,{k}) dim_new={} W==-U/11^(k/2-1): {}", ns.dim(), w == w_from_u);
        let (c, ints) = u11.clear_denominators();
        let cp = charpoly::charpoly_bigint(&ints, u11.rows());
        println!("  charpoly(U11 * {c}) = {cp}");
        println!("  W trace = {:?}", (0..w.rows()).map(|i| w.at(i,i).to_string()).collect::<Vec<_>>());
    }
}
