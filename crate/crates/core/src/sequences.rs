//! Morphisms, codings, fixed points, and the catalog of six automatic
//! sequences.

use std::fmt;
use std::str::FromStr;

use crate::automata::dfao::{self, Dfao};
use crate::numeration::NumerationSystem;
use crate::{Error, Result};

/// Letters are small integers; display names live with the sequence.
pub type Letter = u8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    images: Vec<Vec<Letter>>,
}

impl Morphism {
    /// `images[l]` is the image of letter `l`.
    pub fn new(images: Vec<Vec<Letter>>) -> Result<Self> {
        let n = images.len();
        if images.iter().flatten().any(|&l| l as usize >= n) {
            return Err(Error::InvalidMorphism(
                "image uses a letter outside the alphabet".into(),
            ));
        }
        Ok(Morphism { images })
    }

    pub fn alphabet_size(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, l: Letter) -> &[Letter] {
        &self.images[l as usize]
    }

    pub fn apply(&self, w: &[Letter]) -> Vec<Letter> {
        w.iter().flat_map(|&l| self.image(l).iter().copied()).collect()
    }

    /// `Some(k)` when every image has length `k`.
    pub fn uniform_length(&self) -> Option<usize> {
        let k = self.images.first()?.len();
        self.images.iter().all(|im| im.len() == k).then_some(k)
    }

    /// `ψ(a) = au` with `ψ^n(u)` never empty.
    pub fn is_prolongable_on(&self, a: Letter) -> bool {
        let Some(image) = self.images.get(a as usize) else {
            return false;
        };
        if image.first() != Some(&a) || image.len() < 2 {
            return false;
        }
        // mortal letters are those some power of ψ erases
        let n = self.images.len();
        let mut mortal = vec![false; n];
        let mut changed = true;
        while changed {
            changed = false;
            for l in 0..n {
                if !mortal[l] && self.images[l].iter().all(|&x| mortal[x as usize]) {
                    mortal[l] = true;
                    changed = true;
                }
            }
        }
        image[1..].iter().any(|&x| !mortal[x as usize])
    }
}

/// A letter-to-letter map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coding {
    map: Vec<Letter>,
}

impl Coding {
    pub fn new(map: Vec<Letter>) -> Self {
        Coding { map }
    }

    pub fn apply(&self, l: Letter) -> Letter {
        self.map[l as usize]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceId {
    Fibonacci,
    ThueMorse,
    PeriodDoubling,
    RudinShapiro,
    PaperFolding,
    MephistoWaltz,
}

impl SequenceId {
    pub const ALL: [SequenceId; 6] = [
        SequenceId::Fibonacci,
        SequenceId::ThueMorse,
        SequenceId::PeriodDoubling,
        SequenceId::RudinShapiro,
        SequenceId::PaperFolding,
        SequenceId::MephistoWaltz,
    ];

    pub fn short_name(self) -> &'static str {
        match self {
            SequenceId::Fibonacci => "f",
            SequenceId::ThueMorse => "t",
            SequenceId::PeriodDoubling => "pd",
            SequenceId::RudinShapiro => "rs",
            SequenceId::PaperFolding => "pf",
            SequenceId::MephistoWaltz => "mw",
        }
    }

    pub fn long_name(self) -> &'static str {
        match self {
            SequenceId::Fibonacci => "fibonacci",
            SequenceId::ThueMorse => "thue-morse",
            SequenceId::PeriodDoubling => "period-doubling",
            SequenceId::RudinShapiro => "rudin-shapiro",
            SequenceId::PaperFolding => "paper-folding",
            SequenceId::MephistoWaltz => "mephisto-waltz",
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        SequenceId::ALL
            .into_iter()
            .find(|id| id.short_name() == s || id.long_name() == s)
            .ok_or(Error::UnknownSequence(s))
    }
}

/// A sequence given as `coding(ψ^ω(seed))`, together with a DFAO that should
/// generate the same word over `numeration`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSpec {
    id: SequenceId,
    morphism: Morphism,
    seed: Letter,
    coding: Option<Coding>,
    letters: Vec<String>,
    dfao: Dfao,
    numeration: NumerationSystem,
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

impl SequenceSpec {
    pub fn catalog(id: SequenceId) -> Self {
        let m = |images: Vec<Vec<Letter>>| Morphism::new(images).expect("catalog morphism");
        let ab = strings(&["a", "b"]);
        let pm = strings(&["1", "-1"]);
        let b2 = NumerationSystem::positional(2);
        match id {
            // φ: a -> ab, b -> a
            SequenceId::Fibonacci => SequenceSpec {
                id,
                morphism: m(vec![vec![0, 1], vec![0]]),
                seed: 0,
                coding: None,
                letters: ab,
                dfao: dfao::fibonacci_dfao(),
                numeration: NumerationSystem::zeckendorf(),
            },
            // μ: a -> ab, b -> ba
            SequenceId::ThueMorse => SequenceSpec {
                id,
                morphism: m(vec![vec![0, 1], vec![1, 0]]),
                seed: 0,
                coding: None,
                letters: ab,
                dfao: dfao::thue_morse_dfao(),
                numeration: b2,
            },
            // a -> ab, b -> aa
            SequenceId::PeriodDoubling => SequenceSpec {
                id,
                morphism: m(vec![vec![0, 1], vec![0, 0]]),
                seed: 0,
                coding: None,
                letters: ab,
                dfao: dfao::period_doubling_dfao(),
                numeration: b2,
            },
            // ρ: a -> ab, b -> ac, c -> db, d -> dc; τ: a,b -> 1, c,d -> -1
            SequenceId::RudinShapiro => SequenceSpec {
                id,
                morphism: m(vec![vec![0, 1], vec![0, 2], vec![3, 1], vec![3, 2]]),
                seed: 0,
                coding: Some(Coding::new(vec![0, 0, 1, 1])),
                letters: pm,
                dfao: dfao::rudin_shapiro_dfao(),
                numeration: b2,
            },
            // h: a -> ab, b -> cb, c -> ad, d -> cd; ν: a,b -> 1, c,d -> -1
            SequenceId::PaperFolding => SequenceSpec {
                id,
                morphism: m(vec![vec![0, 1], vec![2, 1], vec![0, 3], vec![2, 3]]),
                seed: 0,
                coding: Some(Coding::new(vec![0, 0, 1, 1])),
                letters: pm,
                dfao: dfao::paper_folding_dfao(),
                numeration: b2,
            },
            // a -> aab, b -> bba
            SequenceId::MephistoWaltz => SequenceSpec {
                id,
                morphism: m(vec![vec![0, 0, 1], vec![1, 1, 0]]),
                seed: 0,
                coding: None,
                letters: ab,
                dfao: dfao::mephisto_waltz_dfao(),
                numeration: NumerationSystem::positional(3),
            },
        }
    }

    pub fn id(&self) -> SequenceId {
        self.id
    }

    pub fn morphism(&self) -> &Morphism {
        &self.morphism
    }

    pub fn seed(&self) -> Letter {
        self.seed
    }

    pub fn coding(&self) -> Option<&Coding> {
        self.coding.as_ref()
    }

    pub fn dfao(&self) -> &Dfao {
        &self.dfao
    }

    pub fn numeration(&self) -> &NumerationSystem {
        &self.numeration
    }

    /// Display names of the output letters, indexed by [`Letter`].
    pub fn letters(&self) -> &[String] {
        &self.letters
    }

    pub fn code(&self, l: Letter) -> Letter {
        self.coding.as_ref().map_or(l, |c| c.apply(l))
    }

    /// Whether the letters are the integers `1` and `-1`.
    pub fn is_numeric(&self) -> bool {
        self.letters.iter().all(|s| s.parse::<i64>().is_ok())
    }

    pub fn render(&self, w: &[Letter]) -> String {
        render_word(&self.letters, w)
    }
}

/// Concatenate letter names; names longer than one character are wrapped in
/// parentheses, so `-1` renders as `(-1)`.
pub fn render_word(names: &[String], w: &[Letter]) -> String {
    let mut s = String::with_capacity(w.len());
    for &l in w {
        let name = &names[l as usize];
        if name.chars().count() == 1 {
            s.push_str(name);
        } else {
            s.push('(');
            s.push_str(name);
            s.push(')');
        }
    }
    s
}

/// Growable prefix of `coding(ψ^ω(seed))`. Already materialized letters are
/// never rewritten.
#[derive(Debug, Clone)]
pub struct SequenceGenerator {
    spec: SequenceSpec,
    fixed: Vec<Letter>,
    // letters of `fixed` before this index have had their image appended
    cursor: usize,
    coded: Vec<Letter>,
}

impl SequenceGenerator {
    pub fn new(spec: SequenceSpec) -> Result<Self> {
        let seed = spec.seed;
        if !spec.morphism.is_prolongable_on(seed) {
            return Err(Error::NotProlongable { letter: seed });
        }
        let fixed = spec.morphism.image(seed).to_vec();
        let coded = fixed.iter().map(|&l| spec.code(l)).collect();
        Ok(SequenceGenerator {
            spec,
            fixed,
            cursor: 1,
            coded,
        })
    }

    pub fn catalog(id: SequenceId) -> Self {
        SequenceGenerator::new(SequenceSpec::catalog(id)).expect("catalog morphisms are prolongable")
    }

    pub fn spec(&self) -> &SequenceSpec {
        &self.spec
    }

    /// Grow to at least `len` letters; each growth step at least doubles the
    /// buffer.
    pub fn ensure(&mut self, len: usize) {
        if self.fixed.len() >= len {
            return;
        }
        let target = len.max(2 * self.fixed.len());
        while self.fixed.len() < target {
            let l = self.fixed[self.cursor];
            self.cursor += 1;
            for &x in self.spec.morphism.image(l) {
                self.fixed.push(x);
                self.coded.push(self.spec.code(x));
            }
        }
    }

    pub fn letter_at(&mut self, n: usize) -> Letter {
        self.ensure(n + 1);
        self.coded[n]
    }

    pub fn prefix(&mut self, len: usize) -> &[Letter] {
        self.ensure(len);
        &self.coded[..len]
    }

    /// Everything generated so far.
    pub fn materialized(&self) -> &[Letter] {
        &self.coded
    }
}

/// First `len` letters of `coding(ψ^ω(seed))`.
pub fn fixed_point_prefix(spec: &SequenceSpec, len: usize) -> Result<Vec<Letter>> {
    let mut g = SequenceGenerator::new(spec.clone())?;
    Ok(g.prefix(len).to_vec())
}

/// First `len` letters produced by the spec's DFAO, as indices into the
/// spec's letters.
pub fn dfao_prefix(spec: &SequenceSpec, len: usize) -> Result<Vec<Letter>> {
    let dfao = spec.dfao();
    let map: Vec<Letter> = dfao
        .outputs()
        .iter()
        .map(|o| {
            spec.letters()
                .iter()
                .position(|l| l == o)
                .map(|k| k as Letter)
                .ok_or_else(|| Error::InvalidAutomaton(format!("output `{o}` is not a letter")))
        })
        .collect::<Result<_>>()?;
    (0..len as u64)
        .map(|n| {
            let idx = dfao.output_index(&spec.numeration().rep(n))?;
            Ok(map[idx])
        })
        .collect()
}

/// Morphic and automatic generation agree on the first `len` letters.
pub fn crosscheck_generation(spec: &SequenceSpec, len: usize) -> bool {
    match (fixed_point_prefix(spec, len), dfao_prefix(spec, len)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

/// `pd[n] = b` exactly when `t[n] = t[n+1]`, for `n < len`.
pub fn pd_from_tm_check(len: usize) -> bool {
    let mut t = SequenceGenerator::catalog(SequenceId::ThueMorse);
    let mut pd = SequenceGenerator::catalog(SequenceId::PeriodDoubling);
    let t = t.prefix(len + 1).to_vec();
    let pd = pd.prefix(len);
    (0..len).all(|n| (pd[n] == 1) == (t[n] == t[n + 1]))
}

/// `rs[n]` is `1` or `-1` by the parity of overlapping `11` blocks in the
/// binary expansion of `n`; checked against both generators.
pub fn rs_counting_check(len: usize) -> bool {
    let spec = SequenceSpec::catalog(SequenceId::RudinShapiro);
    let Ok(morphic) = fixed_point_prefix(&spec, len) else {
        return false;
    };
    let Ok(automatic) = dfao_prefix(&spec, len) else {
        return false;
    };
    (0..len).all(|n| {
        let v = n as u64;
        let blocks = (v & (v >> 1)).count_ones();
        let expect = (blocks % 2) as Letter;
        morphic[n] == expect && automatic[n] == expect
    })
}

/// `mw[n] = a` exactly when the base-3 expansion of `n` has an even number of
/// 2s; checked against both generators.
pub fn mw_counting_check(len: usize) -> bool {
    let spec = SequenceSpec::catalog(SequenceId::MephistoWaltz);
    let Ok(morphic) = fixed_point_prefix(&spec, len) else {
        return false;
    };
    let Ok(automatic) = dfao_prefix(&spec, len) else {
        return false;
    };
    (0..len).all(|n| {
        let mut v = n;
        let mut twos = 0;
        while v > 0 {
            twos += (v % 3 == 2) as u32;
            v /= 3;
        }
        let expect = (twos % 2) as Letter;
        morphic[n] == expect && automatic[n] == expect
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plain(id: SequenceId, len: usize) -> String {
        let spec = SequenceSpec::catalog(id);
        spec.render(&fixed_point_prefix(&spec, len).unwrap())
    }

    #[test]
    fn known_prefixes() {
        assert_eq!(plain(SequenceId::Fibonacci, 8), "abaababa");
        assert_eq!(plain(SequenceId::MephistoWaltz, 9), "aabaabbba");
        assert_eq!(plain(SequenceId::PeriodDoubling, 8), "abaaabab");
        assert_eq!(plain(SequenceId::ThueMorse, 24), "abbabaabbaababbabaababba");
        assert_eq!(plain(SequenceId::RudinShapiro, 8), "111(-1)11(-1)1");
        assert_eq!(
            plain(SequenceId::PaperFolding, 21),
            "11(-1)11(-1)(-1)111(-1)(-1)1(-1)(-1)111(-1)11"
        );
    }

    #[test]
    fn letter_at_extends() {
        let mut f = SequenceGenerator::catalog(SequenceId::Fibonacci);
        assert_eq!(f.letter_at(0), 0);
        let mut t = SequenceGenerator::catalog(SequenceId::ThueMorse);
        assert_eq!(t.letter_at(1), 1);
        let mut pf = SequenceGenerator::catalog(SequenceId::PaperFolding);
        let l = pf.letter_at(2);
        assert_eq!(pf.spec().letters()[l as usize], "-1");
        let before = t.prefix(100).to_vec();
        t.ensure(10_000);
        assert_eq!(&t.materialized()[..100], &before[..]);
    }

    #[test]
    fn uniformity() {
        let k = |id| SequenceSpec::catalog(id).morphism().uniform_length();
        assert_eq!(k(SequenceId::Fibonacci), None);
        assert_eq!(k(SequenceId::ThueMorse), Some(2));
        assert_eq!(k(SequenceId::PeriodDoubling), Some(2));
        assert_eq!(k(SequenceId::RudinShapiro), Some(2));
        assert_eq!(k(SequenceId::PaperFolding), Some(2));
        assert_eq!(k(SequenceId::MephistoWaltz), Some(3));
    }

    #[test]
    fn not_prolongable() {
        let mut spec = SequenceSpec::catalog(SequenceId::RudinShapiro);
        spec.seed = 1; // ρ(b) = ac
        assert_eq!(
            SequenceGenerator::new(spec).unwrap_err(),
            Error::NotProlongable { letter: 1 }
        );
        // a -> ab, b -> ε: the tail is erased after one step
        let m = Morphism::new(vec![vec![0, 1], vec![]]).unwrap();
        assert!(!m.is_prolongable_on(0));
        let m = Morphism::new(vec![vec![0, 1], vec![1, 1]]).unwrap();
        assert!(m.is_prolongable_on(0) && m.is_prolongable_on(1));
    }

    #[test]
    fn counting_definitions() {
        assert!(crosscheck_generation(&SequenceSpec::catalog(SequenceId::Fibonacci), 0));
        assert!(pd_from_tm_check(0));
        assert!(pd_from_tm_check(8));
        assert!(rs_counting_check(0));
        assert!(rs_counting_check(64));
        assert!(mw_counting_check(81));
    }

    #[test]
    fn parse_ids() {
        assert_eq!("pd".parse::<SequenceId>().unwrap(), SequenceId::PeriodDoubling);
        assert_eq!("Thue-Morse".parse::<SequenceId>().unwrap(), SequenceId::ThueMorse);
        assert!("nosuch".parse::<SequenceId>().is_err());
    }
}
