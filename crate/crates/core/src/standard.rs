//! Standard motions on maps of type `A_m` and standard multiple motions on
//! maps of type `B_m`, with period `4m + 2`.

use crate::error::{Error, Result};
use crate::map::{CornerType, Family, FaceForm, OrientedMap};
use crate::motion::{Car, Motion};
use crate::rational::{q, qf, Q};

/// One lap pattern in canonical coordinates: `(time, position)` pairs over
/// `[0, T)` and the number of laps per `T`.
struct Timetable {
    points: Vec<(Q, Q)>,
    laps: u32,
}

fn period(m: u32) -> i128 {
    4 * m as i128 + 2
}

fn timetable(form: FaceForm, m: u32) -> Option<Timetable> {
    let mm = m as i128;
    let t_end = period(m);
    let pts = |v: Vec<(i128, i128)>| v.into_iter().map(|(a, b)| (q(a), q(b))).collect::<Vec<_>>();
    Some(match form {
        FaceForm::A => Timetable {
            points: (0..t_end).map(|t| (q(t), q(t + 1))).collect(),
            laps: 2 * m + 1,
        },
        FaceForm::B { m: j } if j == m => {
            let len = 2 * mm + 3;
            let points = if m == 0 {
                vec![(q(0), q(2)), (q(1), q(3)), (qf(3, 2), q(4))]
            } else {
                let mut p = pts((1..=len).map(|j| (j - 1, j + 1)).collect());
                p.push((q(4 * mm + 1), q(len + 1)));
                p
            };
            Timetable { points, laps: 1 }
        }
        FaceForm::C { m: j } if j == m => {
            let points = if m == 0 {
                vec![(q(0), q(0)), (qf(1, 2), q(1)), (q(1), q(2))]
            } else {
                let mut p = pts(vec![(0, 0), (1, 1), (2 * mm, 1)]);
                p.extend(pts((1..=2 * mm + 1).map(|j| (2 * mm + j, j + 1)).collect()));
                p
            };
            Timetable { points, laps: 1 }
        }
        FaceForm::D { k, l } => d_timetable(k as i128, l as i128, mm),
        _ => return None,
    })
}

fn d_timetable(k: i128, l: i128, m: i128) -> Timetable {
    let len = k + l + 2;
    let mut p = vec![(q(0), q(k + 1))];
    if m == 0 {
        p.extend((1..=l + 1).map(|i| (qf(i, l + 1), q(k + 1 + i))));
        p.extend((1..=k).map(|j| (q(1) + qf(j, k + 1), q(len + j))));
    } else {
        p.push((q(1), q(k + 2)));
        p.push((q(2 * m), q(k + 2)));
        p.extend((1..=l).map(|i| (q(2 * m) + qf(i, l), q(k + 2 + i))));
        p.extend((1..=k).map(|j| (q(2 * m + 1) + qf(j, k), q(len + j))));
        p.push((q(4 * m + 1), q(len + k)));
    }
    Timetable { points: p, laps: 1 }
}

fn stop_corners(map: &OrientedMap) -> Vec<usize> {
    (0..map.num_darts())
        .filter(|&c| matches!(map.corner_type(c), CornerType::PlusPlus | CornerType::MinusMinus))
        .collect()
}

fn check_m(map: &OrientedMap, m: u32, want: &[Family]) -> Result<Vec<(FaceForm, usize)>> {
    let ty = map.map_type()?;
    if !want.contains(&ty.family) {
        return Err(Error::MapType(format!("map family is {:?}", ty.family)));
    }
    if let Some(x) = ty.m {
        if x != m {
            return Err(Error::MapType(format!("map has m = {x}, requested {m}")));
        }
    }
    Ok(ty.faces)
}

fn place(face: usize, offset: usize, tt: &Timetable) -> Car {
    let r = q(offset as i128);
    Car {
        face,
        breakpoints: tt.points.iter().map(|&(t, y)| (t, y + r)).collect(),
        degree: tt.laps,
    }
}

/// The standard motion: one car per face with period `4m + 2`; stop
/// corners are the `(++)` and `(−−)` corners.
pub fn standard_motion_am(map: &OrientedMap, m: u32) -> Result<Motion> {
    let faces = check_m(map, m, &[Family::A, Family::Both])?;
    let mut cars = Vec::new();
    for (f, (form, offset)) in faces.into_iter().enumerate() {
        let tt = timetable(form, m).ok_or_else(|| Error::MapType(format!("face {f} has form {form:?}")))?;
        cars.push(place(f, offset, &tt));
    }
    Ok(Motion {
        period: q(period(m)),
        cars,
        stop_corners: stop_corners(map),
    })
}

/// The standard multiple motion: faces `((+)^{k+1}(−)^{l+1})^s` carry the
/// `s` lifts of the block car through the `s`-fold covering.
pub fn standard_multiple_motion_bm(map: &OrientedMap, m: u32) -> Result<Motion> {
    let faces = check_m(map, m, &[Family::B, Family::Both])?;
    let t = q(period(m));
    let mut cars = Vec::new();
    for (f, (form, offset)) in faces.into_iter().enumerate() {
        let (k, l, s) = match form {
            FaceForm::D { k, l } => (k, l, 1),
            FaceForm::Blocks { k, l, s } => (k, l, s),
            other => {
                let tt = timetable(other, m).ok_or_else(|| Error::MapType(format!("face {f} has form {other:?}")))?;
                cars.push(place(f, offset, &tt));
                continue;
            }
        };
        let block = q(k as i128 + l as i128 + 2);
        let base = d_timetable(k as i128, l as i128, m as i128);
        for j in 0..s {
            let mut points = Vec::new();
            for r in 0..s {
                for &(tm, y) in &base.points {
                    points.push((tm + t * q(r as i128), y + block * q((r + j) as i128)));
                }
            }
            cars.push(place(f, offset, &Timetable { points, laps: 1 }));
        }
    }
    Ok(Motion {
        period: t,
        cars,
        stop_corners: stop_corners(map),
    })
}
