"""Tests for chunked grid evaluation."""

import asyncio

import numpy as np
import pytest

from walkzeta.fanout import MIN_PARALLEL_ITEMS, amap_chunks, map_chunks, split


def chunk_sum(chunk):
    return float(np.sum(chunk))


class TestSplit:
    """Tests for split."""

    def test_even_split(self):
        """Test that chunks cover the items in order."""
        chunks = split(np.arange(10), 3)
        assert [len(c) for c in chunks] == [4, 3, 3]
        assert np.array_equal(np.concatenate(chunks), np.arange(10))

    def test_more_chunks_than_items(self):
        """Test that no empty chunks are produced."""
        assert len(split(np.arange(3), 8)) == 3

    def test_at_least_one_chunk(self):
        """Test that a zero chunk count still gives one chunk."""
        assert len(split(np.arange(5), 0)) == 1


class TestMapChunks:
    """Tests for map_chunks."""

    def test_serial(self):
        """Test that serial mode makes a single call."""
        items = np.arange(MIN_PARALLEL_ITEMS * 2)
        assert map_chunks(len, items, serial=True) == [len(items)]

    def test_small_grids_stay_serial(self):
        """Test that small grids are not fanned out."""
        assert map_chunks(len, np.arange(100), serial=False, n_chunks=4) == [100]

    def test_threaded_keeps_order(self):
        """Test that threaded results come back in chunk order."""
        items = np.arange(5000)
        results = map_chunks(lambda c: int(c[0]), items, serial=False, n_chunks=4)
        assert results == [0, 1250, 2500, 3750]

    def test_threaded_matches_serial(self):
        """Test that the reduction over chunks matches the serial value."""
        items = np.linspace(0.0, 1.0, 6000)
        threaded = sum(map_chunks(chunk_sum, items, serial=False, n_chunks=3))
        assert threaded == pytest.approx(chunk_sum(items), rel=1e-12)

    @pytest.mark.asyncio
    async def test_inside_running_loop(self):
        """Test that a running event loop falls back to serial chunks."""
        items = np.arange(5000)
        results = map_chunks(len, items, serial=False, n_chunks=2)
        assert results == [2500, 2500]


class TestAmapChunks:
    """Tests for amap_chunks."""

    @pytest.mark.asyncio
    async def test_gathers_in_order(self):
        """Test that every chunk is evaluated and ordered."""
        chunks = split(np.arange(9), 3)
        assert await amap_chunks(chunk_sum, chunks) == [3.0, 12.0, 21.0]

    def test_from_sync_code(self):
        """Test driving amap_chunks with asyncio.run."""
        chunks = [np.ones(2), np.ones(3)]
        assert asyncio.run(amap_chunks(len, chunks)) == [2, 3]
