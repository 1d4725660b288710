//! Two-bridge links: 4-plat twist data, the fraction of a plat, Schubert's
//! equivalence criterion, and a canonical representative per class.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::contfrac::{evaluate, standard_expansion, CfSequence};
use crate::error::{Error, Result};
use crate::lines::LineFamily;
use crate::rational::ExtendedRational;

fn display<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn display_all<S: serde::Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Row {
    Top,
    Bottom,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Handedness {
    Right,
    Left,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwistRegion {
    /// `|a_j|` crossings.
    #[serde(serialize_with = "display")]
    pub count: BigInt,
    pub row: Row,
    pub handedness: Handedness,
}

/// The diagram `D(a1, ..., an)`: region `j` sits in the top row for odd `j`;
/// top twists are right-handed for `a_j > 0`, bottom twists for `a_j < 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlatDiagram {
    #[serde(serialize_with = "display_all")]
    pub terms: Vec<BigInt>,
    pub twists: Vec<TwistRegion>,
    /// Every `a_j > 0` and `a1, an >= 2`.
    pub standard: bool,
}

impl PlatDiagram {
    /// Two rows of twist counts, one column per region.
    pub fn render_text(&self) -> String {
        let cell = |t: &TwistRegion| {
            let h = match t.handedness {
                Handedness::Right => 'R',
                Handedness::Left => 'L',
            };
            format!("{}{}", t.count, h)
        };
        let width = self.twists.iter().map(|t| cell(t).len()).max().unwrap_or(1);
        let mut top = String::from("top    |");
        let mut bottom = String::from("bottom |");
        for t in &self.twists {
            let (on, off) = match t.row {
                Row::Top => (&mut top, &mut bottom),
                Row::Bottom => (&mut bottom, &mut top),
            };
            on.push_str(&format!(" {:>width$} |", cell(t)));
            off.push_str(&format!(" {:>width$} |", "."));
        }
        format!("{top}\n{bottom}\n")
    }
}

pub fn plat_of(terms: &[BigInt]) -> Result<PlatDiagram> {
    if terms.is_empty() {
        return Err(Error::EmptySequence);
    }
    let twists = terms
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let row = if k % 2 == 0 { Row::Top } else { Row::Bottom };
            let right = match row {
                Row::Top => a.is_positive(),
                Row::Bottom => a.is_negative(),
            };
            TwistRegion {
                count: a.abs(),
                row,
                handedness: if right {
                    Handedness::Right
                } else {
                    Handedness::Left
                },
            }
        })
        .collect();
    let two = BigInt::from(2);
    let standard =
        terms.iter().all(|a| a.is_positive()) && terms[0] >= two && terms[terms.len() - 1] >= two;
    Ok(PlatDiagram {
        terms: terms.to_vec(),
        twists,
        standard,
    })
}

/// `[0; a1, ..., an]`.
pub fn fraction_of(terms: &[BigInt]) -> Result<ExtendedRational> {
    if terms.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut all = Vec::with_capacity(terms.len() + 1);
    all.push(BigInt::zero());
    all.extend_from_slice(terms);
    Ok(evaluate(&CfSequence::new(all)?))
}

fn mod_inverse(p: &BigInt, q: &BigInt) -> Option<BigInt> {
    let e = p.mod_floor(q).extended_gcd(q);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(q))
    } else {
        None
    }
}

/// `{p, -p, p⁻¹, -p⁻¹} mod q` as residues in `[0, q)`, sorted and deduplicated.
fn schubert_class(p: &BigInt, q: &BigInt) -> Vec<BigInt> {
    let mut class = vec![p.mod_floor(q), (-p).mod_floor(q)];
    if let Some(inv) = mod_inverse(p, q) {
        class.push((-&inv).mod_floor(q));
        class.push(inv);
    }
    class.sort();
    class.dedup();
    class
}

fn finite_positive_den(x: &ExtendedRational) -> Result<()> {
    if x.is_infinite() {
        Err(Error::Infinite(x.to_string()))
    } else {
        Ok(())
    }
}

/// `q' = q` and `p' ≡ ±p^{±1} (mod q)`. With `q = 1` every numerator is
/// `0 mod 1`, the trivial class.
pub fn schubert_equivalent(a: &ExtendedRational, b: &ExtendedRational) -> Result<bool> {
    finite_positive_den(a)?;
    finite_positive_den(b)?;
    let q = a.denom();
    if q != b.denom() {
        return Ok(false);
    }
    let target = b.numer().mod_floor(q);
    Ok(schubert_class(a.numer(), q).contains(&target))
}

/// A fraction `p/q` with `0 <= p/q <= 1/2`, the smallest numerator in its class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct LinkFraction(ExtendedRational);

impl LinkFraction {
    pub fn value(&self) -> &ExtendedRational {
        &self.0
    }
}

impl fmt::Display for LinkFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CanonicalLink {
    pub input: ExtendedRational,
    pub canonical: LinkFraction,
    pub sequence: CfSequence,
    /// Whether `D(a1, ..., an)` read off `sequence` is a standard plat.
    pub standard: bool,
}

/// The class representative with the smallest numerator in `[1, q-1]`
/// (or `0/1` when `q = 1`), with its standard expansion `[0; a1, ..., an]`.
pub fn canonical_form(x: &ExtendedRational) -> Result<CanonicalLink> {
    finite_positive_den(x)?;
    let q = x.denom();
    let p = if q.is_one() {
        BigInt::zero()
    } else {
        schubert_class(x.numer(), q)
            .into_iter()
            .find(|r| !r.is_zero())
            .ok_or_else(|| Error::Invariant(format!("empty class for {x}")))?
    };
    let value = ExtendedRational::from_column(p, q.clone())?;
    let sequence = standard_expansion(&value)?;
    let standard = sequence.n() >= 1 && plat_of(sequence.tail())?.standard;
    Ok(CanonicalLink {
        input: x.clone(),
        canonical: LinkFraction(value),
        sequence,
        standard,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkFamilyEntry {
    pub m: i64,
    pub alpha: ExtendedRational,
    /// `None` for `1/0` and integers, which do not name a 2-bridge link here.
    pub canonical: Option<LinkFraction>,
}

impl LinkFamilyEntry {
    pub fn degenerate(&self) -> bool {
        self.canonical.is_none()
    }
}

/// Canonical links `L(α_m)` of the diagrams `D(a1, ..., m, ..., an)`.
pub fn link_family(
    seq: &CfSequence,
    slot: usize,
    ms: impl IntoIterator<Item = i64>,
) -> Result<Vec<LinkFamilyEntry>> {
    if !seq.a0().is_zero() {
        return Err(Error::NotStandard(format!(
            "{seq} (plat sequences start at 0)"
        )));
    }
    let f = LineFamily::new(seq, slot)?;
    ms.into_iter()
        .map(|m| {
            let alpha = f.alpha_m(m);
            let canonical = if alpha.is_infinite() || alpha.is_integer() {
                None
            } else {
                Some(canonical_form(&alpha)?.canonical)
            };
            Ok(LinkFamilyEntry {
                m,
                alpha,
                canonical,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> ExtendedRational {
        ExtendedRational::new(p, d).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&t| BigInt::from(t)).collect()
    }

    #[test]
    fn plat_rows_and_handedness() {
        let d = plat_of(&ints(&[4, 3, 2, 3])).unwrap();
        assert!(d.standard);
        let rows: Vec<Row> = d.twists.iter().map(|t| t.row).collect();
        assert_eq!(rows, vec![Row::Top, Row::Bottom, Row::Top, Row::Bottom]);
        let hands: Vec<Handedness> = d.twists.iter().map(|t| t.handedness).collect();
        use Handedness::*;
        assert_eq!(hands, vec![Right, Left, Right, Left]);

        let m = plat_of(&ints(&[-4, -3, -2, -3])).unwrap();
        assert!(!m.standard);
        assert!(m
            .twists
            .iter()
            .zip(&d.twists)
            .all(|(a, b)| a.count == b.count && a.row == b.row && a.handedness != b.handedness));

        let one = plat_of(&ints(&[1])).unwrap();
        assert_eq!(
            one.twists,
            vec![TwistRegion {
                count: 1.into(),
                row: Row::Top,
                handedness: Right
            }]
        );
        assert!(!one.standard);
        assert!(matches!(plat_of(&[]), Err(Error::EmptySequence)));
    }

    #[test]
    fn plat_text() {
        let d = plat_of(&ints(&[4, 3, 2])).unwrap();
        assert_eq!(
            d.render_text(),
            "top    | 4R |  . | 2R |\nbottom |  . | 3L |  . |\n"
        );
    }

    #[test]
    fn fractions() {
        assert_eq!(fraction_of(&ints(&[4, 3, 2, 3])).unwrap(), q(24, 103));
        assert_eq!(fraction_of(&ints(&[3, 2])).unwrap(), q(2, 7));
        assert_eq!(fraction_of(&ints(&[2])).unwrap(), q(1, 2));
    }

    #[test]
    fn schubert_examples() {
        assert!(schubert_equivalent(&q(3, 7), &q(5, 7)).unwrap());
        assert!(schubert_equivalent(&q(2, 7), &q(3, 7)).unwrap());
        assert!(!schubert_equivalent(&q(1, 3), &q(1, 5)).unwrap());
        assert!(!schubert_equivalent(&q(1, 7), &q(2, 7)).unwrap());
        assert!(schubert_equivalent(&q(0, 1), &q(3, 1)).unwrap());
        assert!(schubert_equivalent(&ExtendedRational::infinity(), &q(1, 2)).is_err());
    }

    #[test]
    fn canonical_examples() {
        let c = canonical_form(&q(5, 7)).unwrap();
        assert_eq!(c.canonical.value(), &q(2, 7));
        assert_eq!(c.sequence.to_string(), "[0;3,2]");
        assert!(c.standard);
        let c = canonical_form(&q(24, 103)).unwrap();
        assert_eq!(c.canonical.value(), &q(24, 103));
        assert_eq!(c.sequence.to_string(), "[0;4,3,2,3]");
        let c = canonical_form(&q(1, 2)).unwrap();
        assert_eq!(
            (c.canonical.value(), c.sequence.to_string()),
            (&q(1, 2), "[0;2]".into())
        );
        let c = canonical_form(&q(7, 1)).unwrap();
        assert_eq!(c.canonical.value(), &q(0, 1));
        assert!(matches!(
            canonical_form(&ExtendedRational::infinity()),
            Err(Error::Infinite(_))
        ));
    }

    #[test]
    fn family_of_links() {
        let seq = CfSequence::from_i64s(&[0, 3, 2, 4]).unwrap();
        let rows = link_family(&seq, 2, [1]).unwrap();
        assert_eq!(rows[0].alpha, q(5, 19));
        assert_eq!(rows[0].canonical.as_ref().unwrap().value(), &q(4, 19));

        let seq = CfSequence::from_i64s(&[0, 3, 2]).unwrap();
        let rows = link_family(&seq, 2, [2, 0]).unwrap();
        assert_eq!(rows[0].canonical.as_ref().unwrap().value(), &q(2, 7));
        // [0;3,0] = 0
        assert!(rows[1].degenerate());

        // [0;2,-1,2] = 1/0
        let seq = CfSequence::from_i64s(&[0, 2, 2, 2]).unwrap();
        let rows = link_family(&seq, 2, [-1]).unwrap();
        assert_eq!(rows[0].alpha, ExtendedRational::infinity());
        assert!(rows[0].degenerate());

        let shifted = CfSequence::from_i64s(&[1, 3, 2]).unwrap();
        assert!(link_family(&shifted, 1, [1]).is_err());
    }
}
