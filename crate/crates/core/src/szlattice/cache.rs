//! Binary container for lists of subgroups.
//!
//! Layout, all integers little-endian: the 8-byte magic `SZLAT1\0\0`, the
//! group order as `u64`, the subgroup count as `u64`, then for each subgroup
//! its order as `u32` followed by `⌈order_G / 64⌉` `u64` membership words.

use std::io::{Read, Write};
use std::path::Path;

use crate::group::SubgroupSet;
use crate::{Error, Result};

pub const MAGIC: &[u8; 8] = b"SZLAT1\0\0";

pub fn write_subgroups(mut w: impl Write, group_order: usize, subs: &[SubgroupSet]) -> Result<()> {
    w.write_all(MAGIC)?;
    w.write_all(&(group_order as u64).to_le_bytes())?;
    w.write_all(&(subs.len() as u64).to_le_bytes())?;
    let words = SubgroupSet::word_count(group_order);
    for s in subs {
        if s.universe() != group_order || s.words().len() != words {
            return Err(Error::Cache("subgroup does not match the group order".into()));
        }
        w.write_all(&(s.size() as u32).to_le_bytes())?;
        for word in s.words() {
            w.write_all(&word.to_le_bytes())?;
        }
    }
    Ok(())
}

pub fn read_subgroups(mut r: impl Read) -> Result<(usize, Vec<SubgroupSet>)> {
    let mut magic = [0u8; 8];
    r.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(Error::Cache("bad magic".into()));
    }
    let mut b8 = [0u8; 8];
    r.read_exact(&mut b8)?;
    let order = u64::from_le_bytes(b8) as usize;
    r.read_exact(&mut b8)?;
    let count = u64::from_le_bytes(b8) as usize;
    if order == 0 {
        return Err(Error::Cache("zero group order".into()));
    }
    let words = SubgroupSet::word_count(order);
    let mut subs = Vec::with_capacity(count.min(1 << 20));
    let mut b4 = [0u8; 4];
    for i in 0..count {
        r.read_exact(&mut b4)?;
        let size = u32::from_le_bytes(b4) as usize;
        let mut ws = Vec::with_capacity(words);
        for _ in 0..words {
            r.read_exact(&mut b8)?;
            ws.push(u64::from_le_bytes(b8));
        }
        let s = SubgroupSet::from_words(order, ws).ok_or_else(|| Error::Cache(format!("record {i}: stray bits")))?;
        if s.size() != size || !order.is_multiple_of(size.max(1)) || !s.contains(0) {
            return Err(Error::Cache(format!("record {i}: inconsistent order {size}")));
        }
        subs.push(s);
    }
    let mut rest = [0u8; 1];
    if r.read(&mut rest)? != 0 {
        return Err(Error::Cache("trailing bytes".into()));
    }
    Ok((order, subs))
}

pub fn save(path: &Path, group_order: usize, subs: &[SubgroupSet]) -> Result<()> {
    let mut buf = Vec::new();
    write_subgroups(&mut buf, group_order, subs)?;
    std::fs::write(path, buf)?;
    Ok(())
}

pub fn load(path: &Path) -> Result<(usize, Vec<SubgroupSet>)> {
    let bytes = std::fs::read(path)?;
    read_subgroups(bytes.as_slice())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_layout() {
        let subs = vec![SubgroupSet::trivial(70), SubgroupSet::from_indices(70, [0, 5, 69])];
        let mut buf = Vec::new();
        write_subgroups(&mut buf, 70, &subs).unwrap();
        assert_eq!(&buf[..8], MAGIC);
        assert_eq!(u64::from_le_bytes(buf[8..16].try_into().unwrap()), 70);
        assert_eq!(u64::from_le_bytes(buf[16..24].try_into().unwrap()), 2);
        assert_eq!(buf.len(), 24 + 2 * (4 + 2 * 8));
        assert_eq!(u32::from_le_bytes(buf[24..28].try_into().unwrap()), 1);
        assert_eq!(u64::from_le_bytes(buf[28..36].try_into().unwrap()), 1);
        // The second record's order field is 3 even though 3 ∤ 70: rejected on read.
        assert!(read_subgroups(buf.as_slice()).is_err());
        let ok = vec![SubgroupSet::trivial(70), SubgroupSet::from_indices(70, [0, 69])];
        let mut buf = Vec::new();
        write_subgroups(&mut buf, 70, &ok).unwrap();
        assert_eq!(read_subgroups(buf.as_slice()).unwrap(), (70, ok));
    }

    #[test]
    fn rejects_corruption() {
        let mut buf = Vec::new();
        write_subgroups(&mut buf, 64, &[SubgroupSet::trivial(64)]).unwrap();
        let mut bad = buf.clone();
        bad[0] = b'X';
        assert!(read_subgroups(bad.as_slice()).is_err());
        let mut extra = buf.clone();
        extra.push(0);
        assert!(read_subgroups(extra.as_slice()).is_err());
        assert!(read_subgroups(&buf[..buf.len() - 1]).is_err());
    }

    #[test]
    fn files() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("x.szlat");
        let subs = vec![SubgroupSet::full(128)];
        save(&p, 128, &subs).unwrap();
        assert_eq!(load(&p).unwrap(), (128, subs));
    }
}
