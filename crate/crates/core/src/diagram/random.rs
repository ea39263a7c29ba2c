//! Seeded random diagram generators.
//!
//! Shadows grow by inserting a crossing inside a face (joining two edges of
//! that face) and untwisting nugatory crossings; orientations and crossing
//! signs are chosen afterwards. All generators are deterministic in the seed
//! and give up with an error after a bounded number of attempts.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::build::Shadow;
use super::{Braid, Diagram, DiagramError, End, Sign};
use crate::seifert::SeifertData;

const ATTEMPTS: usize = 200;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn infinity_shadow() -> Shadow {
    Shadow {
        links: vec![[End::new(0, 1), End::new(0, 0), End::new(0, 3), End::new(0, 2)]],
        over_odd: vec![true],
        free_loops: 0,
    }
}

fn physical(sh: &Shadow, a: End) -> (End, End) {
    let b = sh.link(a);
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A connected shadow with exactly `c` crossings and no nugatory crossing.
pub fn random_shadow<R: Rng>(r: &mut R, c: usize) -> Result<Shadow, DiagramError> {
    if c < 2 {
        return Err(DiagramError::Generator(format!("no reduced connected shadow with {c} crossings")));
    }
    for _ in 0..ATTEMPTS {
        let mut sh = infinity_shadow();
        let mut steps = 0;
        while steps < 40 * c + 40 {
            steps += 1;
            if sh.free_loops > 0 || sh.is_empty() {
                break;
            }
            if sh.len() < c {
                let faces = sh.faces();
                let f = r.gen_range(0..faces.faces.len());
                let walk = &faces.faces[f];
                if walk.len() < 2 {
                    continue;
                }
                let i = r.gen_range(0..walk.len());
                let j = r.gen_range(0..walk.len());
                let edge = |k: usize| {
                    let cn = walk[k];
                    physical(&sh, End::new(cn.crossing, (cn.index + 1) % 4))
                };
                if i == j || edge(i) == edge(j) {
                    continue;
                }
                sh.insert_in_face(&faces, f, i, j);
            } else {
                let nug = sh.nugatory();
                if nug.is_empty() {
                    return Ok(sh);
                }
                let x = nug[r.gen_range(0..nug.len())];
                sh = sh.untwist(x);
            }
        }
    }
    Err(DiagramError::Generator(format!("no reduced shadow with {c} crossings after {ATTEMPTS} attempts")))
}

fn random_orientation<R: Rng>(r: &mut R, sh: &Shadow) -> Vec<bool> {
    (0..sh.strands().len()).map(|_| r.gen_bool(0.5)).collect()
}

/// A connected reduced positive diagram with exactly `c` crossings.
pub fn positive_diagram(seed: u64, c: usize) -> Result<Diagram, DiagramError> {
    let mut r = rng(seed);
    let sh = random_shadow(&mut r, c)?;
    let rev = random_orientation(&mut r, &sh);
    Ok(sh.orient_positive(&rev))
}

/// A connected reduced diagram with exactly `c` crossings and random signs.
pub fn signed_diagram(seed: u64, c: usize) -> Result<Diagram, DiagramError> {
    let mut r = rng(seed);
    let mut sh = random_shadow(&mut r, c)?;
    for o in sh.over_odd.iter_mut() {
        *o = r.gen_bool(0.5);
    }
    let rev = random_orientation(&mut r, &sh);
    Ok(sh.orient(&rev))
}

/// A connected reduced almost positive diagram with `c` crossings. With
/// `parallel` the negative crossing shares its pair of Seifert circles with
/// another crossing; without, it is the only crossing joining them.
pub fn almost_positive_diagram(seed: u64, c: usize, parallel: bool) -> Result<Diagram, DiagramError> {
    let mut r = rng(seed);
    for _ in 0..ATTEMPTS {
        let sh = random_shadow(&mut r, c)?;
        let rev = random_orientation(&mut r, &sh);
        let d = sh.orient_positive(&rev);
        let sd = SeifertData::new(&d);
        let cands: Vec<usize> = (0..c).filter(|&x| sd.has_parallel_partner(x) == parallel).collect();
        if let Some(&x) = cands.choose(&mut r) {
            return d.switch(x);
        }
    }
    Err(DiagramError::Generator(format!("no almost positive diagram (parallel = {parallel}) with {c} crossings")))
}

/// A positive braid word on `strands` strands using every generator at least
/// twice, so its closure is connected and reduced.
pub fn positive_braid(seed: u64, strands: usize, len: usize) -> Result<Braid, DiagramError> {
    if strands < 2 || len < 2 * (strands - 1) {
        return Err(DiagramError::Generator(format!("cannot use each of {} generators twice in {len} letters", strands.saturating_sub(1))));
    }
    let mut r = rng(seed);
    let mut word: Vec<i32> = (1..strands as i32).flat_map(|g| [g, g]).collect();
    while word.len() < len {
        word.push(r.gen_range(1..strands as i32));
    }
    word.shuffle(&mut r);
    Braid::new(strands, word)
}

/// A special alternating (special and positive) diagram with at most `max_c`
/// crossings: the largest special summand of a random positive diagram.
pub fn special_alternating_diagram(seed: u64, max_c: usize) -> Result<Diagram, DiagramError> {
    let mut r = rng(seed);
    for _ in 0..ATTEMPTS {
        let c = r.gen_range(3..=max_c.max(3));
        let sh = random_shadow(&mut r, c)?;
        let rev = random_orientation(&mut r, &sh);
        let d = sh.orient_positive(&rev);
        let dec = crate::seifert::murasugi_decomposition(&d);
        if let Some(best) = dec.summands.into_iter().filter(|s| s.crossing_count() >= 2 && s.is_reduced()).max_by_key(|s| s.crossing_count()) {
            return Ok(best);
        }
    }
    Err(DiagramError::Generator("no special alternating summand found".into()))
}

/// Random crossing of a diagram with a given sign, if any.
pub fn pick_crossing<R: Rng>(r: &mut R, d: &Diagram, sign: Sign) -> Option<usize> {
    let xs: Vec<usize> = (0..d.crossing_count()).filter(|&x| d.sign(x) == sign).collect();
    xs.choose(r).copied()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shadows_are_reduced_and_planar() {
        for seed in 0..30 {
            let c = 3 + (seed as usize % 10);
            let d = positive_diagram(seed, c).unwrap();
            d.validate().unwrap();
            assert_eq!(d.crossing_count(), c);
            assert!(d.is_connected());
            assert!(d.is_reduced(), "seed {seed}");
            assert!(d.is_positive());
        }
    }

    #[test]
    fn almost_positive_flags() {
        for seed in 0..20 {
            for par in [false, true] {
                let d = almost_positive_diagram(seed, 8, par).unwrap();
                assert!(d.is_almost_positive());
                let p = d.negative_crossings()[0];
                assert_eq!(SeifertData::new(&d).has_parallel_partner(p), par);
            }
        }
    }

    #[test]
    fn deterministic_in_seed() {
        assert_eq!(positive_diagram(7, 9).unwrap(), positive_diagram(7, 9).unwrap());
    }
}
