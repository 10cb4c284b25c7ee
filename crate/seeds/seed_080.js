var total = 100;
function color() {
  total = total + 1;
  return total;
}
color();
color();
print(total);
let score = [];
for (let i = 0; i < 2; i++) {
  score.push(i * 2);
}
let node = score.pop();
score.unshift(node);
print(score[0], score.length);
let prod = [1000, 25, 5, 8];
let store = 0;
for (let i = 0; i < prod.length; i++) {
  store = store + prod[i];
}
print(store);
class head {
  shape(label) {
    return label + 32;
  }
  entry() {
    return "hemp";
  }
}
let width = new head();
print(width.shape(64), width.entry());
function index(name) {
  if (name < 2) {
    return name;
  }
  return index(name - 1) + index(name - 2);
}
print(index(10));
