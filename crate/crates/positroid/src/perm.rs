//! Decorated permutations: bijections of `[n]` with white/black colored
//! fixed points, plus the one-line text format used by the command line.
//!
//! Text format: whitespace-separated tokens, token `i` is the image of `i`
//! in decimal, suffixed by `w` or `b` exactly when `i` is a fixed point.
//! `2 8 6 7 9 4 5 14 13 3 10 11 1 12` is the running 14-element example and
//! `1b 3 2` colors the fixed point 1 black.

use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::cyclic::{GroundSet, Subset};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    White,
    Black,
}

/// A bijection of `[n]` whose fixed points carry a color. White fixed
/// points are loops of the associated positroid, black ones are coloops.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecoratedPermutation {
    images: Vec<u32>,
    inverse: Vec<u32>,
    colors: Vec<Option<Color>>,
}

impl DecoratedPermutation {
    /// Build from images plus a color for every fixed point. Rejects
    /// non-bijections, colors on non-fixed points, and uncolored fixed points.
    pub fn new(images: Vec<u32>, colors: &[(u32, Color)]) -> Result<DecoratedPermutation> {
        let mut p = DecoratedPermutation::new_uncolored(images)?;
        let gs = p.ground_set();
        for &(i, c) in colors {
            gs.check_label(i)?;
            if p.images[(i - 1) as usize] != i {
                return Err(Error::UnexpectedColor { position: i });
            }
            p.colors[(i - 1) as usize] = Some(c);
        }
        for i in 1..=p.n() {
            if p.images[(i - 1) as usize] == i && p.colors[(i - 1) as usize].is_none() {
                return Err(Error::MissingColor { position: i });
            }
        }
        Ok(p)
    }

    /// Build from images, requiring that there are no fixed points.
    pub fn from_images(images: Vec<u32>) -> Result<DecoratedPermutation> {
        let p = DecoratedPermutation::new_uncolored(images)?;
        match p.fixed_points().iter().next() {
            None => Ok(p),
            Some(i) => Err(Error::MissingColor { position: i }),
        }
    }

    fn new_uncolored(images: Vec<u32>) -> Result<DecoratedPermutation> {
        let n = images.len() as u32;
        let gs = GroundSet::new(n)?;
        let mut inverse = vec![0u32; images.len()];
        for (i, &v) in images.iter().enumerate() {
            gs.check_label(v)?;
            if inverse[(v - 1) as usize] != 0 {
                return Err(Error::NotABijection {
                    detail: format!("label {} appears twice", v),
                });
            }
            inverse[(v - 1) as usize] = i as u32 + 1;
        }
        let colors = vec![None; images.len()];
        Ok(DecoratedPermutation {
            images,
            inverse,
            colors,
        })
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn ground_set(&self) -> GroundSet {
        GroundSet::new(self.n()).expect("validated at construction")
    }

    /// The image of `i`.
    pub fn image(&self, i: u32) -> u32 {
        self.images[(i - 1) as usize]
    }

    /// The preimage of `x`.
    pub fn preimage(&self, x: u32) -> u32 {
        self.inverse[(x - 1) as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn color(&self, i: u32) -> Option<Color> {
        self.colors[(i - 1) as usize]
    }

    pub fn fixed_points(&self) -> Subset {
        let mut s = Subset::EMPTY;
        for i in 1..=self.n() {
            if self.image(i) == i {
                s = s.with(i);
            }
        }
        s
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.fixed_points().is_empty()
    }

    /// White fixed points: elements in no basis.
    pub fn loops(&self) -> Subset {
        self.colored(Color::White)
    }

    /// Black fixed points: elements in every basis.
    pub fn coloops(&self) -> Subset {
        self.colored(Color::Black)
    }

    fn colored(&self, which: Color) -> Subset {
        let mut s = Subset::EMPTY;
        for i in 1..=self.n() {
            if self.colors[(i - 1) as usize] == Some(which) {
                s = s.with(i);
            }
        }
        s
    }

    /// A uniformly random fixed-point-free decorated permutation, by
    /// rejection sampling over shuffles. Needs `n ≥ 2`.
    pub fn random_derangement<R: Rng + ?Sized>(n: u32, rng: &mut R) -> Result<DecoratedPermutation> {
        GroundSet::new(n)?;
        if n < 2 {
            return Err(Error::Parse {
                detail: "a fixed-point-free permutation needs n >= 2".into(),
            });
        }
        let mut images: Vec<u32> = (1..=n).collect();
        loop {
            // Fisher-Yates
            for i in (1..images.len()).rev() {
                let j = rng.gen_range(0..=i);
                images.swap(i, j);
            }
            if images.iter().enumerate().all(|(i, &v)| v != i as u32 + 1) {
                return DecoratedPermutation::from_images(images);
            }
        }
    }
}

impl FromStr for DecoratedPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<DecoratedPermutation> {
        let mut images = Vec::new();
        let mut colors = Vec::new();
        for (idx, tok) in s.split_whitespace().enumerate() {
            let i = idx as u32 + 1;
            let (digits, color) = match tok.strip_suffix(['w', 'b']) {
                Some(d) => {
                    let c = if tok.ends_with('b') {
                        Color::Black
                    } else {
                        Color::White
                    };
                    (d, Some(c))
                }
                None => (tok, None),
            };
            let v: u32 = digits
                .parse()
                .map_err(|_| Error::parse(format!("bad token '{}' at position {}", tok, i)))?;
            if let Some(c) = color {
                if v != i {
                    return Err(Error::UnexpectedColor { position: i });
                }
                colors.push((i, c));
            }
            images.push(v);
        }
        if images.is_empty() {
            return Err(Error::parse("empty permutation"));
        }
        DecoratedPermutation::new(images, &colors)
    }
}

impl fmt::Display for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.n() {
            if i > 1 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.image(i))?;
            match self.color(i) {
                Some(Color::White) => write!(f, "w")?,
                Some(Color::Black) => write!(f, "b")?,
                None => {}
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const PAPER14: &str = "2 8 6 7 9 4 5 14 13 3 10 11 1 12";

    #[test]
    fn parse_and_display_roundtrip() {
        let p: DecoratedPermutation = PAPER14.parse().unwrap();
        assert_eq!(p.to_string(), PAPER14);
        assert_eq!(p.image(1), 2);
        assert_eq!(p.preimage(1), 13);
        assert!(p.is_fixed_point_free());

        let q: DecoratedPermutation = "1b 3 2".parse().unwrap();
        assert_eq!(q.to_string(), "1b 3 2");
        assert_eq!(q.color(1), Some(Color::Black));
        assert_eq!(q.coloops().labels(), vec![1]);
        assert!(q.loops().is_empty());

        let w: DecoratedPermutation = "1w 3 2".parse().unwrap();
        assert_eq!(w.loops().labels(), vec![1]);
        assert!(w.coloops().is_empty());
    }

    #[test]
    fn parser_rejects_bad_colors() {
        // fixed point without color
        let e = "1 3 2".parse::<DecoratedPermutation>().unwrap_err();
        assert!(matches!(e, Error::MissingColor { position: 1 }));
        // color on a non-fixed point
        let e = "2w 1".parse::<DecoratedPermutation>().unwrap_err();
        assert!(matches!(e, Error::UnexpectedColor { position: 1 }));
        // non-bijection
        let e = "2 1 3 3".parse::<DecoratedPermutation>().unwrap_err();
        assert!(matches!(e, Error::NotABijection { .. }));
        // repeated colored token: the stray color is caught first
        let e = "1b 1b".parse::<DecoratedPermutation>().unwrap_err();
        assert!(matches!(e, Error::UnexpectedColor { position: 2 }));
        // garbage token
        assert!("2 x".parse::<DecoratedPermutation>().is_err());
        // out of range
        assert!("5 1".parse::<DecoratedPermutation>().is_err());
        assert!("".parse::<DecoratedPermutation>().is_err());
    }

    #[test]
    fn derangement_sampling_is_fixed_point_free() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 2..=10 {
            let p = DecoratedPermutation::random_derangement(n, &mut rng).unwrap();
            assert!(p.is_fixed_point_free());
            assert_eq!(p.n(), n);
        }
        assert!(DecoratedPermutation::random_derangement(1, &mut rng).is_err());
    }
}
