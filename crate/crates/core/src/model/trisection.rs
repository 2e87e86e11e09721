/// Which part of a trisection an element falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Part {
    Positive,
    Negative,
    Neutral,
}

/// Ordered partition of a carrier into positive, negative and neutral parts.
///
/// For agent pairs the parts read as alliance, conflict and neutrality; for
/// strategies as supporting, opposing and neutral.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Trisection<T> {
    pub positive: Vec<T>,
    pub negative: Vec<T>,
    pub neutral: Vec<T>,
}

impl<T> Default for Trisection<T> {
    fn default() -> Self {
        Trisection {
            positive: Vec::new(),
            negative: Vec::new(),
            neutral: Vec::new(),
        }
    }
}

impl<T: Clone> Trisection<T> {
    /// Classifies each element of `carrier`, preserving its order.
    pub fn classify<I, F>(carrier: I, mut part_of: F) -> Self
    where
        I: IntoIterator<Item = T>,
        F: FnMut(&T) -> Part,
    {
        let mut out = Trisection::default();
        for item in carrier {
            match part_of(&item) {
                Part::Positive => out.positive.push(item),
                Part::Negative => out.negative.push(item),
                Part::Neutral => out.neutral.push(item),
            }
        }
        out
    }

    pub fn try_classify<I, F, E>(carrier: I, mut part_of: F) -> Result<Self, E>
    where
        I: IntoIterator<Item = T>,
        F: FnMut(&T) -> Result<Part, E>,
    {
        let mut out = Trisection::default();
        for item in carrier {
            match part_of(&item)? {
                Part::Positive => out.positive.push(item),
                Part::Negative => out.negative.push(item),
                Part::Neutral => out.neutral.push(item),
            }
        }
        Ok(out)
    }

    pub fn part(&self, p: Part) -> &[T] {
        match p {
            Part::Positive => &self.positive,
            Part::Negative => &self.negative,
            Part::Neutral => &self.neutral,
        }
    }

    pub fn len(&self) -> usize {
        self.positive.len() + self.negative.len() + self.neutral.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, mut f: F) -> Trisection<U> {
        Trisection {
            positive: self.positive.iter().map(&mut f).collect(),
            negative: self.negative.iter().map(&mut f).collect(),
            neutral: self.neutral.iter().map(&mut f).collect(),
        }
    }
}

impl<T: PartialEq> Trisection<T> {
    pub fn part_of(&self, item: &T) -> Option<Part> {
        if self.positive.contains(item) {
            Some(Part::Positive)
        } else if self.negative.contains(item) {
            Some(Part::Negative)
        } else if self.neutral.contains(item) {
            Some(Part::Neutral)
        } else {
            None
        }
    }
}
