use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A polynomial indeterminate.
///
/// `B(i)` is the deformation parameter β attached to generator `i`, `Q(i)`
/// the Hecke parameter q of generator `i`. `T`, `U`, `V` and `S` are the
/// generating-function variables. Printed names are `b0`, `q3`, `t`, ...
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    B(u16),
    Q(u16),
    T,
    U,
    V,
    S,
}

impl Var {
    fn letter(self) -> u8 {
        match self {
            Var::B(_) => b'b',
            Var::Q(_) => b'q',
            Var::T => b't',
            Var::U => b'u',
            Var::V => b'v',
            Var::S => b's',
        }
    }

    fn index(self) -> Option<u16> {
        match self {
            Var::B(i) | Var::Q(i) => Some(i),
            _ => None,
        }
    }
}

/// Compares the decimal renderings of two integers as strings, without
/// allocating.
fn cmp_decimal(a: u16, b: u16) -> Ordering {
    fn digits(mut x: u16, buf: &mut [u8; 5]) -> &[u8] {
        let mut pos = buf.len();
        loop {
            pos -= 1;
            buf[pos] = b'0' + (x % 10) as u8;
            x /= 10;
            if x == 0 {
                break;
            }
        }
        &buf[pos..]
    }
    let (mut ba, mut bb) = ([0u8; 5], [0u8; 5]);
    digits(a, &mut ba).cmp(digits(b, &mut bb))
}

// Ordered by printed name: "b10" < "b2" < "q0" < "s" < "t" < "u" < "v".
impl Ord for Var {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letter()
            .cmp(&other.letter())
            .then_with(|| match (self.index(), other.index()) {
                (Some(a), Some(b)) => cmp_decimal(a, b),
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for Var {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::B(i) => write!(f, "b{i}"),
            Var::Q(i) => write!(f, "q{i}"),
            Var::T => f.write_str("t"),
            Var::U => f.write_str("u"),
            Var::V => f.write_str("v"),
            Var::S => f.write_str("s"),
        }
    }
}

impl FromStr for Var {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse(format!("unknown variable `{s}`"));
        match s {
            "t" => return Ok(Var::T),
            "u" => return Ok(Var::U),
            "v" => return Ok(Var::V),
            "s" => return Ok(Var::S),
            _ => {}
        }
        if s.is_empty() || !s.is_ascii() {
            return Err(bad());
        }
        let (head, digits) = s.split_at(1);
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        // Reject leading zeros so that names round-trip.
        if digits.len() > 1 && digits.starts_with('0') {
            return Err(bad());
        }
        let index: u16 = digits.parse().map_err(|_| bad())?;
        match head {
            "b" => Ok(Var::B(index)),
            "q" => Ok(Var::Q(index)),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_follows_names() {
        let mut vars = [Var::V, Var::B(2), Var::T, Var::Q(0), Var::B(10), Var::S, Var::U];
        vars.sort();
        let names: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn parse_round_trip() {
        for v in [Var::B(0), Var::B(17), Var::Q(3), Var::T, Var::U, Var::V, Var::S] {
            assert_eq!(v.to_string().parse::<Var>().unwrap(), v);
        }
        assert!("x".parse::<Var>().is_err());
        assert!("b".parse::<Var>().is_err());
        assert!("b01".parse::<Var>().is_err());
    }
}
