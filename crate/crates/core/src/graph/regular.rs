use serde::{Deserialize, Serialize};

use super::DistanceMatrix;

/// Intersection numbers `p[i][j][h]`: for a pair at distance `h`, the number
/// of vertices at distance `i` from the first and `j` from the second.
///
/// When `welldefined` is false the stored counts are those of the first pair
/// seen at each distance and `witness` names a disagreeing pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionNumbers {
    pub diameter: usize,
    counts: Vec<usize>,
    pub welldefined: bool,
    pub witness: Option<RegularityWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityWitness {
    pub h: usize,
    pub i: usize,
    pub j: usize,
    pub first_pair: (usize, usize),
    pub first_count: usize,
    pub second_pair: (usize, usize),
    pub second_count: usize,
}

impl IntersectionNumbers {
    pub fn get(&self, i: usize, j: usize, h: usize) -> Option<usize> {
        let s = self.diameter + 1;
        (i < s && j < s && h < s).then(|| self.counts[(h * s + i) * s + j])
    }
}

/// Brute-force O(n³) distance-regularity test.
pub fn is_distance_regular(d: &DistanceMatrix) -> IntersectionNumbers {
    let n = d.n();
    let diameter = d.diameter() as usize;
    let s = diameter + 1;
    let mut counts = vec![0usize; s * s * s];
    let mut representative: Vec<Option<(usize, usize)>> = vec![None; s];
    let mut table = vec![0usize; s * s];

    for x in 0..n {
        for y in 0..n {
            let h = d.get(x, y) as usize;
            table.iter_mut().for_each(|c| *c = 0);
            let (rx, ry) = (d.row(x), d.row(y));
            for z in 0..n {
                table[rx[z] as usize * s + ry[z] as usize] += 1;
            }
            let block = &mut counts[h * s * s..(h + 1) * s * s];
            match representative[h] {
                None => {
                    representative[h] = Some((x, y));
                    block.copy_from_slice(&table);
                }
                Some(first) => {
                    if let Some(k) = (0..s * s).find(|&k| block[k] != table[k]) {
                        return IntersectionNumbers {
                            diameter,
                            witness: Some(RegularityWitness {
                                h,
                                i: k / s,
                                j: k % s,
                                first_pair: first,
                                first_count: block[k],
                                second_pair: (x, y),
                                second_count: table[k],
                            }),
                            counts,
                            welldefined: false,
                        };
                    }
                }
            }
        }
    }
    IntersectionNumbers {
        diameter,
        counts,
        welldefined: true,
        witness: None,
    }
}
