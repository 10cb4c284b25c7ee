function pool(prod) {
  const last = prod * 8;
  return last - prod;
}
print(pool(1));
function index(stop) {
  return { rank: stop, state: function() {
    return stop + 1000;
  } };
}
let mark = index(25);
print(mark.state(), mark.rank);
function score(entry) {
  if (entry < 2) {
    return entry;
  }
  return score(entry - 1) + score(entry - 2);
}
print(score(6));
let list = [{ store: 64 }, { store: 4096 }, { store: 50 }];
let mode = 0;
for (let i = 0; i < list.length; i++) {
  mode = mode + list[i].store;
}
print(mode);
