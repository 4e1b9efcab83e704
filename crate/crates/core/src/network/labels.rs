use std::fmt::Write as _;

/// Vertex labels packed into one buffer, so copies cost two `memcpy`s
/// instead of one allocation per vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Labels {
    text: String,
    // end of every label in `text`
    ends: Vec<usize>,
}

impl Labels {
    /// Labels `"1"..="n"`.
    pub fn numbered(n: usize) -> Self {
        let mut labels = Labels {
            text: String::with_capacity(n * 7),
            ends: Vec::with_capacity(n),
        };
        for i in 1..=n {
            let _ = write!(labels.text, "{i}");
            labels.ends.push(labels.text.len());
        }
        labels
    }

    pub fn len(&self) -> usize {
        self.ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ends.is_empty()
    }

    pub fn get(&self, v: usize) -> &str {
        let start = if v == 0 { 0 } else { self.ends[v - 1] };
        &self.text[start..self.ends[v]]
    }

    pub fn push(&mut self, label: &str) {
        self.text.push_str(label);
        self.ends.push(self.text.len());
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &str> + '_ {
        (0..self.len()).map(|v| self.get(v))
    }

    pub fn to_vec(&self) -> Vec<String> {
        self.iter().map(str::to_string).collect()
    }
}

impl<S: AsRef<str>> FromIterator<S> for Labels {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        let mut labels = Labels::default();
        for s in iter {
            labels.push(s.as_ref());
        }
        labels
    }
}

impl From<Vec<String>> for Labels {
    fn from(v: Vec<String>) -> Self {
        v.into_iter().collect()
    }
}

impl<S: AsRef<str>> PartialEq<[S]> for Labels {
    fn eq(&self, other: &[S]) -> bool {
        self.len() == other.len() && self.iter().zip(other).all(|(a, b)| a == b.as_ref())
    }
}

impl<S: AsRef<str>, const N: usize> PartialEq<[S; N]> for Labels {
    fn eq(&self, other: &[S; N]) -> bool {
        self == &other[..]
    }
}
