use ghs_core::model::{InitialData, ProblemSpec};
use ghs_core::quadratic::{find_omega, root_report};
fn main() {
    let s1 = ProblemSpec::new(1.0, 1.0, InitialData::builtin("cos2pi", &[]).unwrap());
    println!("omega1 = {:?}", find_omega(&s1).unwrap());
    let r1 = root_report(&s1).unwrap();
    println!("ex1: M={:?} N={:?} N1={:?} eta*={:?} mult={:?} abar={:?} intv={}",
        r1.m, r1.n, r1.n1, r1.eta_star, r1.multiplicity, r1.alpha_bar, r1.alpha_bar_interval);

    let s2 = ProblemSpec::new(1.0, 1.0, InitialData::builtin("cos2pi", &[0.5]).unwrap());
    println!("omega2 = {:?}", find_omega(&s2).unwrap());
    let r2 = root_report(&s2).unwrap();
    println!("ex2: M={:?} N={:?} N1={:?} eta*={:?} mult={:?} abar={:?} intv={}",
        r2.m, r2.n, r2.n1, r2.eta_star, r2.multiplicity, r2.alpha_bar, r2.alpha_bar_interval);
}
