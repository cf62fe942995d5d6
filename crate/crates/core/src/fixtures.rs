//! Reference knots and links with their known Wada and Alexander polynomials.

use crate::braid::BraidWord;
use crate::ring::LaurentPoly;

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub braid: BraidWord,
    pub wada: i64,
    /// Alexander polynomial up to units ±t^k.
    pub alexander: LaurentPoly,
}

fn row(
    name: &str,
    braid: &str,
    strands: Option<usize>,
    wada: i64,
    alexander: LaurentPoly,
) -> Fixture {
    Fixture {
        name: name.to_string(),
        braid: BraidWord::parse(braid, strands).expect("fixture braids parse"),
        wada,
        alexander,
    }
}

/// 1 − t + t^2 − … + (−1)^{k−1} t^{k−1}.
pub fn torus_alexander(k: u32) -> LaurentPoly {
    LaurentPoly::from_terms(
        (0..k as i64).map(|j| (j, if j % 2 == 0 { 1.into() } else { (-1).into() })),
    )
}

pub fn fixtures() -> Vec<Fixture> {
    let p = |s: &str| s.parse::<LaurentPoly>().expect("fixture polynomials parse");
    let trefoil = p("1 - t + t^2");
    let mut rows = vec![
        row("unknot", "1", None, 1, p("1")),
        row("unknot (B_1)", "", Some(1), 1, p("1")),
        row("Hopf link", "1^2", None, 2, p("1 - t")),
        row("trefoil", "1^3", None, 3, trefoil.clone()),
    ];
    for k in 2..=6u32 {
        rows.push(row(
            &format!("torus (2,{k})"),
            &format!("1^{k}"),
            None,
            k as i64,
            torus_alexander(k),
        ));
    }
    rows.extend([
        row("figure eight", "1 -2 1 -2", None, 5, p("t^2 - 3*t + 1")),
        row("square knot", "1^3 2^3", None, 9, &trefoil * &trefoil),
        row("granny knot", "1^3 2^-3", None, 9, &trefoil * &trefoil),
    ]);
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn torus_formula() {
        assert_eq!(torus_alexander(2), "1 - t".parse().unwrap());
        assert_eq!(torus_alexander(3), "t^2 - t + 1".parse().unwrap());
    }

    #[test]
    fn square_alexander_expands() {
        let sq = fixtures()
            .into_iter()
            .find(|f| f.name == "square knot")
            .unwrap();
        assert_eq!(
            sq.alexander,
            "t^4 - 2*t^3 + 3*t^2 - 2*t + 1".parse().unwrap()
        );
    }
}
