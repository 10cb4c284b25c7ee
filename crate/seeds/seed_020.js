let first = [];
for (let i = 0; i < 4; i++) {
  first.push(i * 5);
}
let value = first.pop();
first.unshift(value);
print(first[0], first.length);
function mode(count) {
  return { tail: count, right: function() {
    return count + 15;
  } };
}
let label = mode(1024);
print(label.right(), label.tail);
let val = height => height * 7;
let tag = height => {
  return val(height) - 1;
};
print(val(7), tag(25));
let mark = { size: 9, prod: "red", color: [4096, 32, 25] };
mark.size = mark.size + mark.color.length;
print(mark.size, mark.prod);
