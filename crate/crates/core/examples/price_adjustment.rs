// The arc-tangent price rule: steps are bounded no matter how large the gap.
use shortside::markets::{update_price, POSITIVE_FLOOR};
use std::f64::consts::PI;

fn main() {
    let varmax = 0.1;
    println!("bound per step: +/-{:.4}", PI * varmax);
    for gap in [-1e6, -10.0, -1.0, 0.0, 0.5, 1.0, 10.0, 1e6] {
        let (d, s) = if gap >= 0.0 { (gap, 0.0) } else { (0.0, -gap) };
        let up = update_price(1.0, d, s, varmax);
        println!("D - S = {gap:>9}: price 1 -> {:.6}", up.price);
    }

    // above 1/pi a large glut could push the price negative; the floor holds
    let up = update_price(1.0, 0.0, 1e9, 0.9);
    println!(
        "varmax 0.9, huge glut: {} (floor {POSITIVE_FLOOR}, clamped {})",
        up.price, up.clamped
    );
}
