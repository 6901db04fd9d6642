//! Parsing of command-line point and number-list arguments.

use crate::hexcoord::HomogeneousPoint;
use crate::{Error, Result};

/// Parses `t1,t2,t3` into a homogeneous point.
///
/// The components must sum to zero within 1e-9; malformed text yields
/// [`Error::Parse`], a violated sum constraint
/// [`Error::InvalidParameter`].
///
/// # Examples
///
/// ```
/// use hexfourier::parse::parse_point;
///
/// let t = parse_point("0.5,-0.25,-0.25").unwrap();
/// assert_eq!(t.t1(), 0.5);
/// assert!(parse_point("0.5,0.5,0.5").is_err());
/// ```
pub fn parse_point(text: &str) -> Result<HomogeneousPoint> {
    let parts = parse_reals(text)?;
    if parts.len() != 3 {
        return Err(Error::Parse(format!(
            "expected t1,t2,t3 but found {} components in {text:?}",
            parts.len()
        )));
    }
    HomogeneousPoint::from_components(parts[0], parts[1], parts[2])
}

/// Parses a comma-separated list of reals, trimming whitespace around
/// each entry.
pub fn parse_reals(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|piece| {
            let piece = piece.trim();
            piece
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("cannot read {piece:?} as a number")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_round_trip() {
        let t = parse_point("0.25, -0.75, 0.5").unwrap();
        assert_eq!((t.t1(), t.t2(), t.t3()), (0.25, -0.75, 0.5));
        let origin = parse_point("0,0,0").unwrap();
        assert_eq!(origin.hex_norm(), 0.0);
    }

    #[test]
    fn point_errors_distinguish_shape_from_domain() {
        assert!(matches!(parse_point("0.1,0.2"), Err(Error::Parse(_))));
        assert!(matches!(parse_point("a,b,c"), Err(Error::Parse(_))));
        assert!(matches!(parse_point(""), Err(Error::Parse(_))));
        assert!(matches!(
            parse_point("0.5,0.5,0.5"),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(matches!(
            parse_point("nan,0,0"),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn real_lists_accept_scientific_notation() {
        assert_eq!(parse_reals("1e-3, 0.5,2").unwrap(), vec![0.001, 0.5, 2.0]);
        assert!(parse_reals("0.5,,0.7").is_err());
        assert!(parse_reals("").is_err());
    }
}
