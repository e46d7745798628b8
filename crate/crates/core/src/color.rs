use core::fmt;

/// One of the three colors. The declaration order is the iteration order
/// everywhere in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Color {
    Red,
    Green,
    Blue,
}

impl Color {
    pub const ALL: [Color; 3] = [Color::Red, Color::Green, Color::Blue];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    #[inline]
    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Green => 'G',
            Color::Blue => 'B',
        }
    }

    pub fn from_letter(c: char) -> Option<Color> {
        match c {
            'R' => Some(Color::Red),
            'G' => Some(Color::Green),
            'B' => Some(Color::Blue),
            _ => None,
        }
    }

    /// Page number of the color in a book embedding (red is page 1).
    #[inline]
    pub fn page(self) -> u8 {
        self as u8 + 1
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Color::Red => "red",
            Color::Green => "green",
            Color::Blue => "blue",
        };
        f.write_str(name)
    }
}

/// Subset of {red, green, blue} as a 3-bit mask.
///
/// The empty set only shows up transiently, when propagation finds a vertex
/// with no color left; live instances never store it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ColorSet(u8);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);
    pub const FULL: ColorSet = ColorSet(0b111);

    #[inline]
    pub fn from_bits(bits: u8) -> Option<ColorSet> {
        (bits <= 0b111).then_some(ColorSet(bits))
    }

    #[inline]
    pub fn bits(self) -> u8 {
        self.0
    }

    #[inline]
    pub fn single(c: Color) -> ColorSet {
        ColorSet(1 << c.index())
    }

    #[inline]
    pub fn contains(self, c: Color) -> bool {
        self.0 & (1 << c.index()) != 0
    }

    #[inline]
    pub fn insert(&mut self, c: Color) {
        self.0 |= 1 << c.index();
    }

    #[inline]
    pub fn remove(&mut self, c: Color) -> bool {
        let had = self.contains(c);
        self.0 &= !(1 << c.index());
        had
    }

    #[inline]
    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// The color of a singleton set.
    #[inline]
    pub fn as_single(self) -> Option<Color> {
        match self.0 {
            0b001 => Some(Color::Red),
            0b010 => Some(Color::Green),
            0b100 => Some(Color::Blue),
            _ => None,
        }
    }

    #[inline]
    pub fn intersect(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    /// Colors in red, green, blue order.
    pub fn iter(self) -> impl Iterator<Item = Color> {
        Color::ALL.into_iter().filter(move |&c| self.contains(c))
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut set = ColorSet::EMPTY;
        for c in iter {
            set.insert(c);
        }
        set
    }
}

/// Letters in `RGB` order, the form used by the instance file format.
impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.iter() {
            write!(f, "{}", c.letter())?;
        }
        Ok(())
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self)
    }
}
