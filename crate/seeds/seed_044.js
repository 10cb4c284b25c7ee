function slot(sum) {
  return { shape: sum, mark: function() {
    return sum + 50;
  } };
}
let label = slot(255);
print(label.mark(), label.shape);
function value(limit) {
  const buf = limit * 4;
  return buf - limit;
}
print(value(64));
let tail = { head: 25, total: "ruby", data: [9, 15, 1024] };
tail.head = tail.head + tail.data.length;
print(tail.head, tail.total);
var store = 65535;
function start() {
  store = store + 5;
  return store;
}
start();
start();
print(store);
