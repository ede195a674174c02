import threading

from starsym.util.pool import fan_out


def test_order_preserved():
    """Test results follow the input order"""
    assert fan_out(lambda x: x * x, range(50), threads=8) == [x * x for x in range(50)]


def test_sequential_when_single_thread():
    """Test threads <= 1 runs on the calling thread"""
    seen = []
    fan_out(lambda x: seen.append(threading.get_ident()), range(5), threads=1)
    assert set(seen) == {threading.get_ident()}


def test_single_item():
    """Test one item never starts a pool"""
    seen = []
    fan_out(lambda x: seen.append(threading.get_ident()), [1], threads=4)
    assert seen == [threading.get_ident()]


def test_empty():
    """Test an empty input yields an empty list"""
    assert fan_out(str, [], threads=4) == []
